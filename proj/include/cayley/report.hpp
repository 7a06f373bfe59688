#pragma once

// JSON and CSV renderings of profiles, records and comparison rows. Field
// order is fixed; every number is an exact integer or a num/den pair.

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cayley/extremal.hpp"
#include "cayley/metrics.hpp"

namespace cayley {

using Json = nlohmann::ordered_json;

Json ElementToJson(const GroupElement& u);
Json ElementsToJson(const std::vector<GroupElement>& elements);

// {"group","gens","diameter","avg_num","avg_den","reached","farthest"}
Json ProfileToJson(const DistanceProfile& profile);

Json RecordToJson(const ExtremalRecord& record);
ExtremalRecord RecordFromJson(const Json& json);

Json CounterexampleToJson(const CounterexampleReport& report);
Json FrontierToJson(const FrontierRow& row);

// Parses a canonical group name such as "Z2xZ6" or "Z1".
AbelianGroup GroupFromName(std::string_view name);
GeneratingSet SetFromJson(const AbelianGroup& g, const Json& gens);

// RFC 4180 quoting when the field contains a comma, quote or newline.
std::string CsvField(std::string_view field);
std::vector<std::string> ParseCsvLine(std::string_view line);

// "(0,1),(1,5)"
std::string FormatSet(const GeneratingSet& gens);

struct ExtremalRow {
  int d = 0;
  int k = 0;
  ExtremalRecord cyclic;
  ExtremalRecord abelian;
};

inline constexpr std::string_view kExtremalCsvHeader =
    "d,k,m_cyclic,m_star,gap,witness_group,witness_set";
std::string ExtremalCsvRow(const ExtremalRow& row);

inline constexpr std::string_view kFrontierCsvHeader =
    "m,k,cyclic_avg_num,cyclic_avg_den,cyclic_group,cyclic_set,"
    "abelian_avg_num,abelian_avg_den,abelian_group,abelian_set,strict_improvement";
std::string FrontierCsvRow(const FrontierRow& row);

}  // namespace cayley
