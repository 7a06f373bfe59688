#pragma once

// Bundled verification suites. Each check records what was expected and
// what was observed; "flagged" marks known table irregularities that are
// reported but do not fail the suite.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayley/extremal.hpp"

namespace cayley {

enum class CheckStatus { kPass, kFail, kFlagged };

const char* ToString(CheckStatus status);

struct Check {
  std::string claim;
  CheckStatus status = CheckStatus::kPass;
  std::string expected;
  std::string observed;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  double elapsed_seconds = 0;

  bool passed() const;
};

using Range = std::pair<Int, Int>;  // inclusive

struct SuiteParams {
  std::optional<Range> x;
  std::optional<Range> d;
  std::optional<Range> m;
  int k = 2;
  SearchOptions search;
};

const std::vector<std::string>& SuiteNames();

// Throws kInvalidInput for an unknown suite or an empty range.
SuiteResult RunSuite(const std::string& name, const SuiteParams& params = {});

}  // namespace cayley
