#pragma once

// Extremal orders for the degree-diameter problem on Abelian Cayley
// digraphs: closed forms for degree two, the known constructions, and
// exhaustive searches that certify m(d,k) (cyclic) and m*(d,k) (Abelian).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cayley/abelian.hpp"
#include "cayley/metrics.hpp"

namespace cayley {

enum class Scope { kCyclicOnly, kAllAbelian };

const char* ToString(Scope scope);

struct ExtremalRecord {
  int d = 0;
  int k = 0;
  Int value = 0;
  AbelianGroup witness_group;
  GeneratingSet witness_set;
  int witness_diameter = 0;
  Int exhaustive_up_to = 0;  // every order in (value, exhaustive_up_to] refuted
  Scope scope = Scope::kCyclicOnly;
};

struct CounterexampleReport {
  int d = 0;
  int k = 2;
  Int m_star = 0;
  Int m_cyc = 0;
  AbelianGroup abelian_group;
  GeneratingSet abelian_set;
  int abelian_diameter = 0;
  Int cyclic_refutation_count = 0;     // cyclic candidates over (m_cyc, ceiling]
  Int cyclic_candidates_at_m_star = 0;  // of which at order m_star
};

struct SearchOptions {
  std::optional<Int> cap;
  // Cyclic scope only: test one representative per orbit of the unit group.
  bool unit_reduction = true;
  int workers = 1;
};

struct SearchStats {
  // Candidate sets tested per order. Complete for every order above the
  // returned value; lower orders may be skipped.
  std::map<Int, Int> candidates;
};

// floor(d(d+4)/3) + 1
Int MCyclicFormula(int d);
// ceil((d+2)^2/3) - 1, the equivalent second form.
Int MCyclicFormulaCeil(int d);
// floor((d+2)^2/3)
Int MStarUpperBound(int d);
// ceil(sqrt(3m)) - 2 in integer arithmetic.
int MinDiameterBoundAbelian(Int m);
// m(d,2) + 1 when d = 1 (mod 3), m(d,2) otherwise.
Int MStarProposition(int d);

// C(d+k, k), saturated at INT64_MAX.
Int BallBound(int d, int k);

struct StarConstruction {
  int x;
  CanonicalForm form;  // Z_{3x} x Z_x as written, and its canonical group
  GeneratingSet gens;
  int expected_diameter;

  const AbelianGroup& group() const { return form.group(); }
  // The two vertices (2x, x-1) and (x, x-1) in canonical coordinates.
  std::vector<GroupElement> expected_farthest() const;
};

// Gamma = Z_{3x} x Z_x with A = {(1,0), (-1,1)}; x = 1 degenerates to Z_3.
StarConstruction BuildStarConstruction(int x);

struct FamilyRow {
  int row = 0;  // 1..9
  Int m = 0;
  int d = 0;
  Int a = 1;
  Int b = 0;  // reduced mod m
  bool degenerate = false;  // b collides with a or the identity
};

// Nine optimal double-loop families from 3x^2 through 3x^2+6x+2.
std::vector<FamilyRow> Table1Families(int x);

// Value of b in row 9 under the sign-corrected reading -(3x+4).
Int Table1Row9Alternate(int x);

ExtremalRecord SearchMCyclic(int d, int k, const SearchOptions& options = {},
                             SearchStats* stats = nullptr);
ExtremalRecord SearchMStar(int d, int k, const SearchOptions& options = {},
                           SearchStats* stats = nullptr);

// Re-runs BFS on the witness. Throws kInternal on mismatch.
void VerifyRecord(const ExtremalRecord& record);

struct OrderOptimum {
  int diameter = 0;
  AbelianGroup group;
  GeneratingSet gens;
};

OrderOptimum MinDiameterForOrder(Int m, int k, Scope scope,
                                 const SearchOptions& options = {});

CounterexampleReport CertifyCounterexample(int d, const SearchOptions& options = {});

struct AverageOptimum {
  Rational average;
  AbelianGroup group;
  GeneratingSet gens;
};

struct FrontierRow {
  Int m = 0;
  int k = 0;
  AverageOptimum cyclic;
  AverageOptimum abelian;
  bool strict_improvement = false;  // abelian < cyclic
};

FrontierRow AvgDistanceFrontier(Int m, int k, const SearchOptions& options = {});

}  // namespace cayley
