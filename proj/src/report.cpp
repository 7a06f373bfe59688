#include "cayley/report.hpp"

#include "cayley/error.hpp"
#include "cayley/literals.hpp"

namespace cayley {

namespace {

Json RationalNum(const std::optional<Rational>& r) {
  return r ? Json(r->numerator()) : Json(nullptr);
}
Json RationalDen(const std::optional<Rational>& r) {
  return r ? Json(r->denominator()) : Json(nullptr);
}

}  // namespace

Json ElementToJson(const GroupElement& u) {
  Json out = Json::array();
  for (Int x : u.coords()) out.push_back(x);
  return out;
}

Json ElementsToJson(const std::vector<GroupElement>& elements) {
  Json out = Json::array();
  for (const auto& u : elements) out.push_back(ElementToJson(u));
  return out;
}

Json ProfileToJson(const DistanceProfile& profile) {
  Json out;
  out["group"] = profile.group.name();
  out["gens"] = ElementsToJson(profile.gens.elements());
  out["diameter"] = profile.diameter ? Json(*profile.diameter) : Json(nullptr);
  auto avg = profile.average();
  out["avg_num"] = RationalNum(avg);
  out["avg_den"] = RationalDen(avg);
  out["reached"] = profile.reached;
  Json farthest = Json::array();
  if (profile.diameter) {
    std::vector<GroupElement> far;
    for (Int v = 0; v < profile.group.order(); ++v) {
      if (profile.dist[static_cast<std::size_t>(v)] == *profile.diameter) {
        far.push_back(profile.group.decode(v));
      }
    }
    std::sort(far.begin(), far.end());
    farthest = ElementsToJson(far);
  }
  out["farthest"] = farthest;
  return out;
}

Json RecordToJson(const ExtremalRecord& record) {
  Json out;
  out["d"] = record.d;
  out["k"] = record.k;
  out["value"] = record.value;
  out["witness_group"] = record.witness_group.name();
  out["witness_set"] = ElementsToJson(record.witness_set.elements());
  out["witness_diameter"] = record.witness_diameter;
  out["exhaustive_up_to"] = record.exhaustive_up_to;
  out["scope"] = ToString(record.scope);
  return out;
}

AbelianGroup GroupFromName(std::string_view name) {
  return Canonicalize(ParseGroupLiteral(name));
}

GeneratingSet SetFromJson(const AbelianGroup& g, const Json& gens) {
  std::vector<GroupElement> elements;
  for (const auto& e : gens) {
    auto coords = e.get<std::vector<Int>>();
    if (coords.size() != g.rank()) {
      throw Error(ErrorCode::kParse, "generator rank does not match " + g.name());
    }
    elements.push_back(g.element(coords));
  }
  return GeneratingSet(g, std::move(elements));
}

ExtremalRecord RecordFromJson(const Json& json) {
  try {
    ExtremalRecord record;
    record.d = json.at("d").get<int>();
    record.k = json.at("k").get<int>();
    record.value = json.at("value").get<Int>();
    record.witness_group = GroupFromName(json.at("witness_group").get<std::string>());
    record.witness_set = SetFromJson(record.witness_group, json.at("witness_set"));
    record.witness_diameter = json.at("witness_diameter").get<int>();
    record.exhaustive_up_to = json.at("exhaustive_up_to").get<Int>();
    auto scope = json.at("scope").get<std::string>();
    if (scope == "cyclic-only") {
      record.scope = Scope::kCyclicOnly;
    } else if (scope == "all-abelian") {
      record.scope = Scope::kAllAbelian;
    } else {
      throw Error(ErrorCode::kParse, "unknown scope '" + scope + "'");
    }
    return record;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

Json CounterexampleToJson(const CounterexampleReport& report) {
  Json out;
  out["d"] = report.d;
  out["k"] = report.k;
  out["m_star"] = report.m_star;
  out["m_cyc"] = report.m_cyc;
  Json witness;
  witness["group"] = report.abelian_group.name();
  witness["gens"] = ElementsToJson(report.abelian_set.elements());
  witness["diameter"] = report.abelian_diameter;
  out["abelian_witness"] = witness;
  out["cyclic_refutation_count"] = report.cyclic_refutation_count;
  out["cyclic_candidates_at_m_star"] = report.cyclic_candidates_at_m_star;
  return out;
}

Json FrontierToJson(const FrontierRow& row) {
  auto optimum = [](const AverageOptimum& o) {
    Json out;
    out["avg_num"] = o.average.numerator();
    out["avg_den"] = o.average.denominator();
    out["group"] = o.group.name();
    out["gens"] = ElementsToJson(o.gens.elements());
    return out;
  };
  Json out;
  out["m"] = row.m;
  out["k"] = row.k;
  out["cyclic"] = optimum(row.cyclic);
  out["abelian"] = optimum(row.abelian);
  out["strict_improvement"] = row.strict_improvement;
  return out;
}

std::string CsvField(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> ParseCsvLine(std::string_view line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  if (quoted) throw Error(ErrorCode::kParse, "unterminated quoted CSV field");
  return out;
}

std::string FormatSet(const GeneratingSet& gens) { return FormatElementList(gens.elements()); }

std::string ExtremalCsvRow(const ExtremalRow& row) {
  std::string out;
  out += std::to_string(row.d) + ',' + std::to_string(row.k) + ',';
  out += std::to_string(row.cyclic.value) + ',' + std::to_string(row.abelian.value) + ',';
  out += std::to_string(row.abelian.value - row.cyclic.value) + ',';
  out += CsvField(row.abelian.witness_group.name()) + ',';
  out += CsvField(FormatSet(row.abelian.witness_set));
  return out;
}

std::string FrontierCsvRow(const FrontierRow& row) {
  auto optimum = [](const AverageOptimum& o) {
    return std::to_string(o.average.numerator()) + ',' + std::to_string(o.average.denominator()) +
           ',' + CsvField(o.group.name()) + ',' + CsvField(FormatSet(o.gens));
  };
  return std::to_string(row.m) + ',' + std::to_string(row.k) + ',' + optimum(row.cyclic) + ',' +
         optimum(row.abelian) + ',' + (row.strict_improvement ? "true" : "false");
}

}  // namespace cayley
