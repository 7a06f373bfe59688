#include "cayley/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "cayley/error.hpp"

namespace cayley {

namespace {

void RequireDiameter(int d) {
  if (d < 2) throw Error(ErrorCode::kOutOfDomain, "formula needs d >= 2");
}

Int ISqrt(Int n) {
  Int r = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Non-identity elements of g, as mixed-radix indices, in lexicographic
// coordinate order.
std::vector<Int> CandidatePool(const AbelianGroup& g) {
  std::vector<Int> pool;
  for (const auto& e : g.elements()) {
    Int idx = g.encode(e);
    if (idx != 0) pool.push_back(idx);
  }
  return pool;
}

// Visits every k-subset of pool (as positions) in lexicographic order until
// visit returns true.
template <class Visit>
void ForEachSubset(std::size_t n, int k, Visit&& visit) {
  if (k < 0 || static_cast<std::size_t>(k) > n) return;
  std::vector<std::size_t> pos(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
  while (true) {
    if (visit(pos)) return;
    std::size_t i = pos.size();
    while (i > 0 && pos[i - 1] == n - pos.size() + i - 1) --i;
    if (i == 0) return;
    ++pos[i - 1];
    for (std::size_t j = i; j < pos.size(); ++j) pos[j] = pos[j - 1] + 1;
  }
}

// Orbit representatives of the unit action on sorted subsets of Z_m.
class UnitFilter {
 public:
  explicit UnitFilter(Int m) : m_(m) {
    for (Int u = 2; u < m; ++u) {
      if (Gcd(u, m) == 1) units_.push_back(u);
    }
  }

  bool is_canonical(std::span<const Int> set) {
    image_.resize(set.size());
    for (Int u : units_) {
      for (std::size_t i = 0; i < set.size(); ++i) image_[i] = set[i] * u % m_;
      std::sort(image_.begin(), image_.end());
      if (std::lexicographical_compare(image_.begin(), image_.end(), set.begin(), set.end())) {
        return false;
      }
    }
    return true;
  }

 private:
  Int m_;
  std::vector<Int> units_;
  std::vector<Int> image_;
};

struct Feasible {
  std::vector<Int> gens;  // encoded
  int diameter;
};

// Lexicographically first k-subset of g with diameter <= d.
std::optional<Feasible> FirstFeasible(const AbelianGroup& g, int d, int k, bool reduce,
                                      Int& tested) {
  auto pool = CandidatePool(g);
  BfsEngine engine(g);
  std::optional<UnitFilter> filter;
  if (reduce && g.is_cyclic()) filter.emplace(g.order());
  std::vector<Int> gens(static_cast<std::size_t>(std::max(k, 0)));
  std::optional<Feasible> found;
  ForEachSubset(pool.size(), k, [&](const std::vector<std::size_t>& pos) {
    for (std::size_t i = 0; i < pos.size(); ++i) gens[i] = pool[pos[i]];
    if (filter && !filter->is_canonical(gens)) return false;
    ++tested;
    auto r = engine.run(gens, d);
    if (r.reached == g.order()) {
      found = Feasible{gens, r.eccentricity};
      return true;
    }
    return false;
  });
  return found;
}

GeneratingSet ToSet(const AbelianGroup& g, std::span<const Int> encoded) {
  std::vector<GroupElement> elements;
  for (Int idx : encoded) elements.push_back(g.decode(idx));
  return GeneratingSet(g, std::move(elements));
}

std::vector<AbelianGroup> GroupsOfOrder(Int m, Scope scope) {
  if (scope == Scope::kAllAbelian) return EnumerateAbelianGroups(m);
  return {AbelianGroup::Cyclic(m)};
}

constexpr Int kMaxCeiling = 1'000'000;

struct OrderResult {
  bool done = false;
  std::optional<Feasible> feasible;
  std::size_t group_index = 0;
  Int tested = 0;
};

// Scans orders from the ceiling downward; workers pull orders from a shared
// counter and skip orders below the best feasible order already found. Every
// order above the final value is therefore always examined in full.
ExtremalRecord Search(int d, int k, Scope scope, const SearchOptions& options,
                      SearchStats* stats) {
  if (d < 1 || k < 1) throw Error(ErrorCode::kOutOfDomain, "search needs d >= 1 and k >= 1");
  Int ceiling = BallBound(d, k);
  if (options.cap) ceiling = std::min(ceiling, std::max<Int>(*options.cap, 1));
  if (ceiling > kMaxCeiling) {
    throw Error(ErrorCode::kOutOfDomain,
                "scan ceiling " + std::to_string(ceiling) + " is beyond desk scale; pass a cap");
  }
  const bool reduce = options.unit_reduction && scope == Scope::kCyclicOnly;

  std::vector<OrderResult> results(static_cast<std::size_t>(ceiling + 1));
  std::atomic<Int> next{ceiling};
  std::atomic<Int> best{1};  // the trivial group is always feasible

  auto worker = [&] {
    while (true) {
      Int m = next.fetch_sub(1);
      if (m <= 1 || m < best.load()) return;
      auto& slot = results[static_cast<std::size_t>(m)];
      auto groups = GroupsOfOrder(m, scope);
      for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        slot.feasible = FirstFeasible(groups[gi], d, k, reduce, slot.tested);
        if (slot.feasible) {
          slot.group_index = gi;
          break;
        }
      }
      slot.done = true;
      if (slot.feasible) {
        Int seen = best.load();
        while (m > seen && !best.compare_exchange_weak(seen, m)) {
        }
      }
    }
  };

  int workers = std::max(options.workers, 1);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  ExtremalRecord record;
  record.d = d;
  record.k = k;
  record.scope = scope;
  record.exhaustive_up_to = ceiling;
  record.value = 1;
  for (Int m = ceiling; m >= 2; --m) {
    const auto& slot = results[static_cast<std::size_t>(m)];
    if (!slot.done) {
      throw Error(ErrorCode::kInternal, "order above the result was not examined");
    }
    if (slot.feasible) {
      auto g = GroupsOfOrder(m, scope)[slot.group_index];
      record.value = m;
      record.witness_set = ToSet(g, slot.feasible->gens);
      record.witness_group = std::move(g);
      record.witness_diameter = slot.feasible->diameter;
      break;
    }
  }
  if (stats) {
    stats->candidates.clear();
    for (Int m = 2; m <= ceiling; ++m) {
      const auto& slot = results[static_cast<std::size_t>(m)];
      if (slot.done) stats->candidates[m] = slot.tested;
    }
  }
  VerifyRecord(record);
  return record;
}

}  // namespace

const char* ToString(Scope scope) {
  return scope == Scope::kCyclicOnly ? "cyclic-only" : "all-abelian";
}

Int MCyclicFormula(int d) {
  RequireDiameter(d);
  Int dd = d;
  return dd * (dd + 4) / 3 + 1;
}

Int MCyclicFormulaCeil(int d) {
  RequireDiameter(d);
  Int s = static_cast<Int>(d + 2) * (d + 2);
  return (s + 2) / 3 - 1;
}

Int MStarUpperBound(int d) {
  RequireDiameter(d);
  return static_cast<Int>(d + 2) * (d + 2) / 3;
}

int MinDiameterBoundAbelian(Int m) {
  if (m < 2) throw Error(ErrorCode::kOutOfDomain, "bound needs m >= 2");
  Int n = 3 * m;
  Int r = ISqrt(n);
  if (r * r < n) ++r;
  return static_cast<int>(r - 2);
}

Int MStarProposition(int d) {
  Int m = MCyclicFormula(d);
  return d % 3 == 1 ? m + 1 : m;
}

Int BallBound(int d, int k) {
  if (d < 0 || k < 0) throw Error(ErrorCode::kOutOfDomain, "ball bound needs d, k >= 0");
  // C(d+k, k) built incrementally; each partial product is itself binomial.
  __int128 c = 1;
  constexpr __int128 kMax = std::numeric_limits<Int>::max();
  for (int i = 1; i <= k; ++i) {
    c = c * (d + i) / i;
    if (c > kMax) return std::numeric_limits<Int>::max();
  }
  return static_cast<Int>(c);
}

std::vector<GroupElement> StarConstruction::expected_farthest() const {
  std::vector<GroupElement> out;
  if (x == 1) {
    out = {form.map({2}), form.map({1})};
  } else {
    out = {form.map({2 * x, x - 1}), form.map({x, x - 1})};
  }
  std::sort(out.begin(), out.end());
  return out;
}

StarConstruction BuildStarConstruction(int x) {
  if (x < 1) throw Error(ErrorCode::kOutOfDomain, "construction needs x >= 1");
  if (x == 1) {
    CanonicalForm form(GroupSpec{{3}});
    GeneratingSet gens(form.group(), {form.map({1}), form.map({-1})});
    return StarConstruction{x, std::move(form), std::move(gens), 1};
  }
  CanonicalForm form(GroupSpec{{3 * x, x}});
  GeneratingSet gens(form.group(), {form.map({1, 0}), form.map({-1, 1})});
  return StarConstruction{x, std::move(form), std::move(gens), 3 * x - 2};
}

std::vector<FamilyRow> Table1Families(int x) {
  if (x < 1) return {};
  const Int X = x;
  struct Raw {
    Int m;
    Int d;
    Int b;
  };
  const Raw raw[] = {
      {3 * X * X, 3 * X - 1, 3 * X - 1},
      {3 * X * X + X, 3 * X - 1, 3 * X},
      {3 * X * X + 2 * X, 3 * X - 1, -3 * X},
      {3 * X * X + 2 * X + 1, 3 * X, 3 * X + 1},
      {3 * X * X + 3 * X + 1, 3 * X, 3 * X + 2},
      {3 * X * X + 4 * X + 1, 3 * X, -3 * X - 2},
      {3 * X * X + 4 * X + 2, 3 * X + 1, 3 * X + 3},
      {3 * X * X + 5 * X + 2, 3 * X + 1, 3 * X + 4},
      {3 * X * X + 6 * X + 2, 3 * X + 1, -3 * X + 4},
  };
  std::vector<FamilyRow> rows;
  for (int i = 0; i < 9; ++i) {
    FamilyRow row;
    row.row = i + 1;
    row.m = raw[i].m;
    row.d = static_cast<int>(raw[i].d);
    row.a = 1 % row.m;
    row.b = ((raw[i].b % row.m) + row.m) % row.m;
    row.degenerate = row.b == 0 || row.b == row.a;
    rows.push_back(row);
  }
  return rows;
}

Int Table1Row9Alternate(int x) {
  Int m = 3 * Int{x} * x + 6 * Int{x} + 2;
  Int b = -(3 * Int{x} + 4);
  return ((b % m) + m) % m;
}

ExtremalRecord SearchMCyclic(int d, int k, const SearchOptions& options, SearchStats* stats) {
  return Search(d, k, Scope::kCyclicOnly, options, stats);
}

ExtremalRecord SearchMStar(int d, int k, const SearchOptions& options, SearchStats* stats) {
  return Search(d, k, Scope::kAllAbelian, options, stats);
}

void VerifyRecord(const ExtremalRecord& record) {
  if (record.witness_group.order() != record.value) {
    throw Error(ErrorCode::kInternal, "witness order does not match the recorded value");
  }
  if (record.value > record.exhaustive_up_to) {
    throw Error(ErrorCode::kInternal, "value exceeds the exhaustive ceiling");
  }
  if (record.value == 1) return;
  if (record.scope == Scope::kCyclicOnly && !record.witness_group.is_cyclic()) {
    throw Error(ErrorCode::kInternal, "cyclic record with a non-cyclic witness");
  }
  if (record.witness_set.size() != static_cast<std::size_t>(record.k)) {
    throw Error(ErrorCode::kInternal, "witness set has the wrong size");
  }
  auto diameter = Diameter(record.witness_group, record.witness_set);
  if (!diameter || *diameter != record.witness_diameter || *diameter > record.d) {
    throw Error(ErrorCode::kInternal, "witness does not re-verify by BFS");
  }
}

OrderOptimum MinDiameterForOrder(Int m, int k, Scope scope, const SearchOptions& options) {
  if (m < 2) throw Error(ErrorCode::kOutOfDomain, "order must be >= 2");
  if (k < 1 || k > m - 1) throw Error(ErrorCode::kNoValidSet, "no k-subset of non-identity elements");
  const bool reduce = options.unit_reduction && scope == Scope::kCyclicOnly;
  std::optional<OrderOptimum> best;
  for (const auto& g : GroupsOfOrder(m, scope)) {
    auto pool = CandidatePool(g);
    BfsEngine engine(g);
    std::optional<UnitFilter> filter;
    if (reduce && g.is_cyclic()) filter.emplace(g.order());
    std::vector<Int> gens(static_cast<std::size_t>(k));
    ForEachSubset(pool.size(), k, [&](const std::vector<std::size_t>& pos) {
      for (std::size_t i = 0; i < pos.size(); ++i) gens[i] = pool[pos[i]];
      if (filter && !filter->is_canonical(gens)) return false;
      // Only a strictly smaller diameter replaces the incumbent.
      int limit = best ? best->diameter - 1 : BfsEngine::kNoLimit;
      if (limit < 0) return true;
      auto r = engine.run(gens, limit);
      if (r.reached == m) best = OrderOptimum{r.eccentricity, g, ToSet(g, gens)};
      return false;
    });
  }
  if (!best) throw Error(ErrorCode::kNoValidSet, "no generating k-subset exists");
  return *best;
}

CounterexampleReport CertifyCounterexample(int d, const SearchOptions& options) {
  RequireDiameter(d);
  if (d % 3 != 1) {
    throw Error(ErrorCode::kNoGapExpected, "a gap is only expected for d = 1 (mod 3)");
  }
  SearchStats cyclic_stats;
  auto cyclic = SearchMCyclic(d, 2, options, &cyclic_stats);
  auto abelian = SearchMStar(d, 2, options);

  CounterexampleReport report;
  report.d = d;
  report.m_star = abelian.value;
  report.m_cyc = cyclic.value;
  report.abelian_group = abelian.witness_group;
  report.abelian_set = abelian.witness_set;
  report.abelian_diameter = abelian.witness_diameter;
  for (const auto& [m, tested] : cyclic_stats.candidates) {
    if (m > cyclic.value) report.cyclic_refutation_count += tested;
  }
  if (auto it = cyclic_stats.candidates.find(abelian.value); it != cyclic_stats.candidates.end()) {
    report.cyclic_candidates_at_m_star = it->second;
  }

  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::kCertificationFailure,
                "d=" + std::to_string(d) + ": " + why + " (m*=" + std::to_string(report.m_star) +
                    ", m=" + std::to_string(report.m_cyc) + ")");
  };
  if (report.m_cyc != MCyclicFormula(d)) fail("cyclic search disagrees with the closed form");
  if (report.m_star != MStarProposition(d)) fail("Abelian search disagrees with the proposition");
  if (report.m_star != report.m_cyc + 1) fail("expected a gap of exactly one");
  if (report.abelian_group.rank() < 2) fail("Abelian witness is cyclic");
  if (cyclic.exhaustive_up_to < report.m_star) fail("cyclic scan did not reach m*");
  return report;
}

FrontierRow AvgDistanceFrontier(Int m, int k, const SearchOptions& options) {
  if (m < 2) throw Error(ErrorCode::kOutOfDomain, "order must be >= 2");
  if (k < 1 || k > m - 1) throw Error(ErrorCode::kNoValidSet, "no k-subset of non-identity elements");

  auto best_in = [&](Scope scope) {
    const bool reduce = options.unit_reduction && scope == Scope::kCyclicOnly;
    std::optional<AverageOptimum> best;
    Int best_total = 0;
    for (const auto& g : GroupsOfOrder(m, scope)) {
      auto pool = CandidatePool(g);
      BfsEngine engine(g);
      std::optional<UnitFilter> filter;
      if (reduce && g.is_cyclic()) filter.emplace(g.order());
      std::vector<Int> gens(static_cast<std::size_t>(k));
      ForEachSubset(pool.size(), k, [&](const std::vector<std::size_t>& pos) {
        for (std::size_t i = 0; i < pos.size(); ++i) gens[i] = pool[pos[i]];
        if (filter && !filter->is_canonical(gens)) return false;
        auto r = engine.run(gens);
        if (r.reached == m && (!best || r.total < best_total)) {
          best_total = r.total;
          best = AverageOptimum{Rational(r.total, m - 1), g, ToSet(g, gens)};
        }
        return false;
      });
    }
    if (!best) throw Error(ErrorCode::kNoValidSet, "no generating k-subset exists");
    return *best;
  };

  FrontierRow row;
  row.m = m;
  row.k = k;
  row.cyclic = best_in(Scope::kCyclicOnly);
  row.abelian = best_in(Scope::kAllAbelian);
  row.strict_improvement = row.abelian.average < row.cyclic.average;
  return row;
}

}  // namespace cayley
