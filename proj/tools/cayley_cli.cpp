// cayley: distance metrics and extremal certification for Abelian Cayley
// digraphs.
//
//   cayley diam Z11 1,3
//   cayley search --mode abelian --d 4 --k 2
//   cayley verify table1 --x 2..5
//   cayley table extremal --d 2..7 --k 2

#include <charconv>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cayley/error.hpp"
#include "cayley/extremal.hpp"
#include "cayley/literals.hpp"
#include "cayley/metrics.hpp"
#include "cayley/report.hpp"
#include "cayley/suites.hpp"

namespace {

using namespace cayley;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// "a..b" or a single integer.
Range ParseRange(const std::string& text) {
  auto parse = [&](std::string_view s) {
    Int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw Error(ErrorCode::kParse, "bad range '" + text + "'");
    }
    return v;
  };
  auto dots = text.find("..");
  Range r = dots == std::string::npos
                ? Range{parse(text), parse(text)}
                : Range{parse(std::string_view(text).substr(0, dots)),
                        parse(std::string_view(text).substr(dots + 2))};
  if (r.first > r.second) throw Error(ErrorCode::kInvalidInput, "empty range '" + text + "'");
  return r;
}

std::optional<Range> OptionalRange(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return ParseRange(text);
}

std::string JoinCsv(std::initializer_list<std::string> fields) {
  std::string out;
  bool first = true;
  for (const auto& f : fields) {
    if (!first) out += ',';
    out += CsvField(f);
    first = false;
  }
  return out;
}

std::string Str(Int v) { return std::to_string(v); }

std::string JsonOrEmpty(const Json& j) { return j.is_null() ? "" : j.dump(); }

struct Options {
  std::string format;  // empty: the subcommand default
  std::string mode = "cyclic";
  int d = 0;
  int k = 2;
  std::string d_range;
  std::string x_range;
  std::string m_range;
  std::optional<Int> cap;
  int workers = 1;
  bool no_unit_reduction = false;
  std::string group;
  std::vector<std::string> gens;
  std::string suite;
  std::string kind;
};

SearchOptions ToSearchOptions(const Options& o) {
  SearchOptions s;
  s.cap = o.cap;
  s.workers = o.workers;
  s.unit_reduction = !o.no_unit_reduction;
  return s;
}

int RunDiam(const Options& o) {
  CanonicalForm form(ParseGroupLiteral(o.group));
  std::string joined;
  for (const auto& g : o.gens) {
    if (!joined.empty()) joined += ',';
    joined += g;
  }
  GeneratingSet gens(form.group(), ParseElements(form, joined));
  auto profile = BfsProfile(form.group(), gens);
  auto json = ProfileToJson(profile);
  if (o.format == "csv") {
    std::cout << "group,gens,diameter,avg_num,avg_den,reached,farthest\n";
    std::cout << JoinCsv({json["group"].get<std::string>(), json["gens"].dump(),
                          JsonOrEmpty(json["diameter"]), JsonOrEmpty(json["avg_num"]),
                          JsonOrEmpty(json["avg_den"]), json["reached"].dump(),
                          json["farthest"].dump()})
              << '\n';
  } else {
    std::cout << json.dump() << '\n';
  }
  return kExitPass;
}

int RunSearch(const Options& o) {
  auto options = ToSearchOptions(o);
  auto record = o.mode == "abelian" ? SearchMStar(o.d, o.k, options)
                                    : SearchMCyclic(o.d, o.k, options);
  auto json = RecordToJson(record);
  if (o.format == "csv") {
    std::cout << "d,k,value,witness_group,witness_set,witness_diameter,exhaustive_up_to,scope\n";
    std::cout << JoinCsv({Str(record.d), Str(record.k), Str(record.value),
                          record.witness_group.name(), FormatSet(record.witness_set),
                          Str(record.witness_diameter), Str(record.exhaustive_up_to),
                          ToString(record.scope)})
              << '\n';
  } else {
    std::cout << json.dump() << '\n';
  }
  return kExitPass;
}

int RunVerify(const Options& o) {
  SuiteParams params;
  params.x = OptionalRange(o.x_range);
  params.d = OptionalRange(o.d_range);
  params.m = OptionalRange(o.m_range);
  params.k = o.k;
  params.search = ToSearchOptions(o);
  auto result = RunSuite(o.suite, params);

  if (o.format == "csv") {
    std::cout << "claim,status,expected,observed\n";
    for (const auto& c : result.checks) {
      std::cout << JoinCsv({c.claim, ToString(c.status), c.expected, c.observed}) << '\n';
    }
  } else {
    Json out;
    out["suite"] = result.suite;
    out["passed"] = result.passed();
    Json checks = Json::array();
    for (const auto& c : result.checks) {
      Json j;
      j["claim"] = c.claim;
      j["status"] = ToString(c.status);
      j["expected"] = c.expected;
      j["observed"] = c.observed;
      checks.push_back(j);
    }
    out["checks"] = checks;
    std::cout << out.dump(2) << '\n';
  }
  std::size_t fails = 0, flagged = 0;
  for (const auto& c : result.checks) {
    fails += c.status == CheckStatus::kFail;
    flagged += c.status == CheckStatus::kFlagged;
  }
  std::cerr << result.suite << ": " << result.checks.size() << " checks, " << fails << " failed, "
            << flagged << " flagged (" << result.elapsed_seconds << " s)\n";
  return result.passed() ? kExitPass : kExitFail;
}

int RunTable(const Options& o) {
  auto options = ToSearchOptions(o);
  const bool csv = o.format != "json";
  Json rows = Json::array();
  if (o.kind == "extremal") {
    if (o.d_range.empty()) throw Error(ErrorCode::kInvalidInput, "table extremal needs --d");
    auto [lo, hi] = ParseRange(o.d_range);
    if (lo < 1) throw Error(ErrorCode::kInvalidInput, "diameters must be >= 1");
    if (csv) std::cout << kExtremalCsvHeader << '\n';
    for (Int d = lo; d <= hi; ++d) {
      ExtremalRow row{static_cast<int>(d), o.k, SearchMCyclic(static_cast<int>(d), o.k, options),
                      SearchMStar(static_cast<int>(d), o.k, options)};
      if (csv) {
        std::cout << ExtremalCsvRow(row) << '\n';
      } else {
        Json j;
        j["d"] = row.d;
        j["k"] = row.k;
        j["m_cyclic"] = RecordToJson(row.cyclic);
        j["m_star"] = RecordToJson(row.abelian);
        j["gap"] = row.abelian.value - row.cyclic.value;
        rows.push_back(j);
      }
    }
  } else if (o.kind == "avgdist") {
    if (o.m_range.empty()) throw Error(ErrorCode::kInvalidInput, "table avgdist needs --m");
    auto [lo, hi] = ParseRange(o.m_range);
    if (lo < 2) throw Error(ErrorCode::kInvalidInput, "orders must be >= 2");
    if (csv) std::cout << kFrontierCsvHeader << '\n';
    for (Int m = lo; m <= hi; ++m) {
      auto row = AvgDistanceFrontier(m, o.k, options);
      if (csv) {
        std::cout << FrontierCsvRow(row) << '\n';
      } else {
        rows.push_back(FrontierToJson(row));
      }
    }
  } else {
    throw Error(ErrorCode::kInvalidInput, "unknown table kind '" + o.kind + "'");
  }
  if (!csv) std::cout << rows.dump() << '\n';
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Distance metrics and extremal orders of Abelian Cayley digraphs"};
  app.require_subcommand(1);

  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--cap", o.cap, "Largest order to scan");
    sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--no-unit-reduction", o.no_unit_reduction,
                  "Test every cyclic candidate instead of one per unit orbit");
  };

  auto* diam = app.add_subcommand("diam", "Distance profile of one Cayley digraph");
  diam->add_option("group", o.group, "Group literal, e.g. Z11 or Z6xZ2")->required();
  diam->add_option("gens", o.gens, "Generators, e.g. 1,3 or (1,0),(-1,1)")->required();
  diam->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* search = app.add_subcommand("search", "Exhaustive search for m(d,k) or m*(d,k)");
  search->add_option("--mode", o.mode)->check(CLI::IsMember({"cyclic", "abelian"}));
  search->add_option("--d", o.d, "Diameter bound")->required()->check(CLI::PositiveNumber);
  search->add_option("--k", o.k, "Degree")->check(CLI::PositiveNumber);
  search->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  add_search(search);

  auto* verify = app.add_subcommand("verify", "Run a bundled verification suite");
  verify->add_option("suite", o.suite)->required()->check(CLI::IsMember(SuiteNames()));
  verify->add_option("--x", o.x_range, "Range a..b of the family parameter");
  verify->add_option("--d", o.d_range, "Range a..b of diameters");
  verify->add_option("--m", o.m_range, "Range a..b of orders");
  verify->add_option("--k", o.k, "Degree")->check(CLI::PositiveNumber);
  verify->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  add_search(verify);

  auto* table = app.add_subcommand("table", "Emit a comparison table");
  table->add_option("kind", o.kind)->required()->check(CLI::IsMember({"extremal", "avgdist"}));
  table->add_option("--d", o.d_range, "Range a..b of diameters");
  table->add_option("--m", o.m_range, "Range a..b of orders");
  table->add_option("--k", o.k, "Degree")->check(CLI::PositiveNumber);
  table->add_option("--format", o.format, "Output format (csv by default)")
      ->check(CLI::IsMember({"json", "csv"}));
  add_search(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*diam) return RunDiam(o);
    if (*search) return RunSearch(o);
    if (*verify) return RunVerify(o);
    if (*table) return RunTable(o);
  } catch (const Error& e) {
    std::cerr << "error (" << ToString(e.code()) << "): " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::kCertificationFailure:
      case ErrorCode::kInternal:
        return kExitFail;
      default:
        return kExitUsage;
    }
  }
  return kExitUsage;
}
