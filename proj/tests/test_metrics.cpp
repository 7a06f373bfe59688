#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "doctest.h"
#include "cayley/abelian.hpp"
#include "cayley/error.hpp"
#include "cayley/metrics.hpp"

using namespace cayley;

namespace {

GeneratingSet Cyc(const AbelianGroup& g, std::initializer_list<Int> values) {
  std::vector<GroupElement> out;
  for (Int v : values) out.push_back(g.element({v}));
  return GeneratingSet(g, out);
}

// Distance oracle by layered reachability: layer t+1 is layer t shifted by
// every generator, using only element arithmetic.
std::map<GroupElement, int> LayeredDistances(const AbelianGroup& g, const GeneratingSet& gens) {
  std::map<GroupElement, int> dist;
  std::set<GroupElement> layer = {g.identity()};
  dist[g.identity()] = 0;
  for (int t = 1; !layer.empty(); ++t) {
    std::set<GroupElement> next;
    for (const auto& v : layer) {
      for (const auto& a : gens.elements()) {
        auto w = g.add(v, a);
        if (!dist.count(w)) next.insert(w);
      }
    }
    for (const auto& w : next) dist[w] = t;
    layer = std::move(next);
  }
  return dist;
}

// Lexicographically smallest coefficient vector of minimal length reaching
// target, by scanning every vector with sum <= limit.
std::optional<std::vector<Int>> ScanCoefficients(const AbelianGroup& g, const GeneratingSet& gens,
                                                 const GroupElement& target, Int limit) {
  const std::size_t k = gens.size();
  for (Int total = 0; total <= limit; ++total) {
    std::vector<Int> c(k, 0);
    std::optional<std::vector<Int>> best;
    // All compositions of total into k non-negative parts, any order.
    std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int left) {
      if (i + 1 == k) {
        c[i] = left;
        auto sum = g.identity();
        for (std::size_t j = 0; j < k; ++j) sum = g.add(sum, g.scale(gens[j], c[j]));
        if (sum == target && (!best || c < *best)) best = c;
        return;
      }
      for (Int v = 0; v <= left; ++v) {
        c[i] = v;
        rec(i + 1, left - v);
      }
    };
    if (k > 0) rec(0, total);
    if (best) return best;
  }
  return std::nullopt;
}

void CheckCertificate(const AbelianGroup& g, const GeneratingSet& gens,
                      const DistanceProfile& profile, const GroupElement& target) {
  auto cert = CertifyDistance(g, gens, target);
  REQUIRE(cert.coeffs.size() == gens.size());
  CHECK(cert.length() == *profile.distance(target));
  for (std::size_t j = 0; j < g.rank(); ++j) {
    Int sum = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) sum += cert.coeffs[i] * gens[i][j];
    CHECK(sum % g.modulus(j) == target[j]);
  }
}

}  // namespace

TEST_CASE("bfs examples") {
  auto z11 = AbelianGroup::Cyclic(11);
  CHECK(Diameter(z11, Cyc(z11, {1, 3})) == 4);

  CanonicalForm form({{6, 2}});
  GeneratingSet star(form.group(), {form.map({1, 0}), form.map({-1, 1})});
  auto profile = BfsProfile(form.group(), star);
  CHECK(profile.diameter == 4);
  CHECK(profile.reached == 12);

  auto z5 = AbelianGroup::Cyclic(5);
  auto p5 = BfsProfile(z5, Cyc(z5, {1}));
  CHECK(p5.dist == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(p5.diameter == 4);
  CHECK(p5.average() == Rational(10, 4));
  CHECK(AverageDistance(z5, Cyc(z5, {1})) == Rational(10, 4));
}

TEST_CASE("Z6 with {2,3} matches path enumeration") {
  auto z6 = AbelianGroup::Cyclic(6);
  // Every word of length <= 5 over {2, 3}; record the shortest length
  // landing on each residue.
  std::vector<int> shortest(6, -1);
  for (int len = 0; len <= 5; ++len) {
    for (int mask = 0; mask < (1 << len); ++mask) {
      int v = 0;
      for (int i = 0; i < len; ++i) v = (v + ((mask >> i) & 1 ? 3 : 2)) % 6;
      if (shortest[v] < 0) shortest[v] = len;
    }
  }
  auto profile = BfsProfile(z6, Cyc(z6, {2, 3}));
  CHECK(profile.reached == 6);
  CHECK(profile.dist == shortest);
  CHECK(profile.diameter == 3);
  CHECK(profile.distance(z6.element({1})) == 3);
}

TEST_CASE("diameter and generation examples") {
  auto z12 = AbelianGroup::Cyclic(12);
  CHECK(Diameter(z12, Cyc(z12, {1, 5})) == 5);
  auto z4 = AbelianGroup::Cyclic(4);
  CHECK_FALSE(Diameter(z4, Cyc(z4, {2})).has_value());
  auto p4 = BfsProfile(z4, Cyc(z4, {2}));
  CHECK(p4.reached == 2);
  CHECK_FALSE(p4.average().has_value());
  auto z26 = AbelianGroup::Cyclic(26);
  CHECK(Diameter(z26, Cyc(z26, {1, 8})) == 7);

  CHECK(IsGenerating(z12, Cyc(z12, {1, 5})));
  CHECK_FALSE(IsGenerating(z12, Cyc(z12, {2, 4})));

  AbelianGroup z2z6({2, 6});
  GeneratingSet a(z2z6, {GroupElement({1, 0}), GroupElement({1, 5})});
  // Closure oracle: the subgroup generated by a repeated sums.
  std::set<GroupElement> closure = {z2z6.identity()};
  for (bool grew = true; grew;) {
    grew = false;
    for (auto v : std::vector<GroupElement>(closure.begin(), closure.end())) {
      for (const auto& gen : a.elements()) grew |= closure.insert(z2z6.add(v, gen)).second;
    }
  }
  CHECK(closure.size() == 12);
  CHECK(IsGenerating(z2z6, a));
}

TEST_CASE("generating set validation") {
  auto z12 = AbelianGroup::Cyclic(12);
  CHECK_THROWS_AS(Cyc(z12, {0, 1}), Error);
  CHECK_THROWS_AS(Cyc(z12, {1, 13}), Error);  // 13 reduces to 1
  CHECK_THROWS_AS(GeneratingSet(z12, {GroupElement({12})}), Error);
  auto set = Cyc(z12, {5, 1});
  CHECK(set[0] == GroupElement({1}));
  CHECK(set[1] == GroupElement({5}));
  AbelianGroup z2z6({2, 6});
  try {
    BfsProfile(z2z6, set);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidInput);
  }
}

TEST_CASE("farthest set examples") {
  auto z5 = AbelianGroup::Cyclic(5);
  CHECK(FarthestSet(z5, Cyc(z5, {1})) == std::vector<GroupElement>{GroupElement({4})});

  CanonicalForm form({{6, 2}});
  GeneratingSet star(form.group(), {form.map({1, 0}), form.map({-1, 1})});
  std::vector<GroupElement> expected = {form.map({2, 1}), form.map({4, 1})};
  std::sort(expected.begin(), expected.end());
  CHECK(FarthestSet(form.group(), star) == expected);

  auto z11 = AbelianGroup::Cyclic(11);
  auto gens = Cyc(z11, {1, 3});
  std::vector<GroupElement> oracle;
  for (const auto& [v, d] : LayeredDistances(z11, gens)) {
    if (d == 4) oracle.push_back(v);
  }
  CHECK(!oracle.empty());
  CHECK(FarthestSet(z11, gens) == oracle);

  auto z4 = AbelianGroup::Cyclic(4);
  try {
    FarthestSet(z4, Cyc(z4, {2}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotStronglyConnected);
  }
}

TEST_CASE("certificate examples") {
  auto z11 = AbelianGroup::Cyclic(11);
  auto gens = Cyc(z11, {1, 3});
  auto cert = CertifyDistance(z11, gens, z11.element({9}));
  CHECK(cert.coeffs == std::vector<Int>{0, 3});
  CHECK(CertifyDistance(z11, gens, z11.identity()).coeffs == std::vector<Int>{0, 0});

  AbelianGroup z2z6({2, 6});
  GeneratingSet a(z2z6, {GroupElement({1, 0}), GroupElement({1, 5})});
  auto profile = BfsProfile(z2z6, a);
  auto target = GroupElement({0, 5});
  auto scanned = ScanCoefficients(z2z6, a, target, *profile.diameter);
  REQUIRE(scanned);
  auto c = CertifyDistance(z2z6, a, target);
  CHECK(c.coeffs == *scanned);
  CHECK(c.length() == *profile.distance(target));

  auto z4 = AbelianGroup::Cyclic(4);
  try {
    CertifyDistance(z4, Cyc(z4, {2}), z4.element({1}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoCertificate);
  }
}

TEST_CASE("certificates agree with the coefficient scan") {
  for (Int m = 2; m <= 16; ++m) {
    for (const auto& g : EnumerateAbelianGroups(m)) {
      auto all = g.elements();
      for (std::size_t i = 1; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
          GeneratingSet gens(g, {all[i], all[j]});
          auto profile = BfsProfile(g, gens);
          for (Int v = 0; v < m; ++v) {
            auto t = g.decode(v);
            auto scanned = ScanCoefficients(g, gens, t, m);
            if (!profile.distance(t)) {
              CHECK_FALSE(scanned);
              CHECK_THROWS_AS(CertifyDistance(g, gens, t), Error);
              continue;
            }
            REQUIRE(scanned);
            CHECK(CertifyDistance(g, gens, t).coeffs == *scanned);
          }
        }
      }
    }
  }
}

TEST_CASE("three-generator certificates") {
  AbelianGroup g({3, 6});
  GeneratingSet gens(g, {GroupElement({1, 1}), GroupElement({0, 4}), GroupElement({2, 3})});
  auto profile = BfsProfile(g, gens);
  for (const auto& t : g.elements()) {
    if (!profile.distance(t)) continue;
    CheckCertificate(g, gens, profile, t);
    CHECK(CertifyDistance(g, gens, t).coeffs == *ScanCoefficients(g, gens, t, 18));
  }
}

TEST_CASE("average distance examples and errors") {
  auto z11 = AbelianGroup::Cyclic(11);
  auto gens = Cyc(z11, {1, 3});
  Int sum = 0;
  for (const auto& [v, d] : LayeredDistances(z11, gens)) sum += d;
  CHECK(AverageDistance(z11, gens) == Rational(sum, 10));

  AbelianGroup z2z6({2, 6});
  GeneratingSet a(z2z6, {GroupElement({1, 0}), GroupElement({1, 5})});
  sum = 0;
  for (const auto& [v, d] : LayeredDistances(z2z6, a)) sum += d;
  CHECK(AverageDistance(z2z6, a) == Rational(sum, 11));

  try {
    AverageDistance(AbelianGroup(), GeneratingSet());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUndefinedAverage);
  }
  auto z4 = AbelianGroup::Cyclic(4);
  try {
    AverageDistance(z4, Cyc(z4, {2}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotStronglyConnected);
  }
}

TEST_CASE("bfs agrees with the layered oracle for every 2-set of order <= 50") {
  for (Int m = 3; m <= 50; ++m) {
    for (const auto& g : EnumerateAbelianGroups(m)) {
      auto all = g.elements();
      for (std::size_t i = 1; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
          GeneratingSet gens(g, {all[i], all[j]});
          auto profile = BfsProfile(g, gens);
          auto oracle = LayeredDistances(g, gens);
          REQUIRE(static_cast<Int>(oracle.size()) == profile.reached);
          int max_d = 0;
          for (const auto& [v, d] : oracle) {
            REQUIRE(profile.distance(v) == d);
            max_d = std::max(max_d, d);
            // One generator step increases distance by at most one.
            for (const auto& a : gens.elements()) {
              REQUIRE(*profile.distance(g.add(v, a)) <= d + 1);
            }
          }
          if (profile.generates()) {
            REQUIRE(profile.diameter == max_d);
          } else {
            REQUIRE_FALSE(profile.diameter.has_value());
          }
        }
      }
    }
  }
}

TEST_CASE("unit action preserves the profile of cyclic digraphs") {
  for (Int m = 3; m <= 40; ++m) {
    auto g = AbelianGroup::Cyclic(m);
    for (Int a = 1; a < m; ++a) {
      for (Int b = a + 1; b < m; ++b) {
        auto base = BfsProfile(g, Cyc(g, {a, b}));
        std::optional<std::size_t> far_count;
        if (base.diameter) far_count = FarthestSet(g, Cyc(g, {a, b})).size();
        for (Int u = 2; u < m; ++u) {
          if (Gcd(u, m) != 1) continue;
          auto image = BfsProfile(g, Cyc(g, {a * u % m, b * u % m}));
          REQUIRE(image.diameter == base.diameter);
          REQUIRE(image.total_distance == base.total_distance);
          for (Int v = 0; v < m; ++v) {
            REQUIRE(image.dist[static_cast<std::size_t>(v * u % m)] ==
                    base.dist[static_cast<std::size_t>(v)]);
          }
          if (far_count) {
            REQUIRE(FarthestSet(g, Cyc(g, {a * u % m, b * u % m})).size() == *far_count);
          }
        }
      }
    }
  }
}

TEST_CASE("quotients never increase distances") {
  for (Int m = 4; m <= 40; ++m) {
    auto g = AbelianGroup::Cyclic(m);
    for (Int q = 2; q < m; ++q) {
      if (m % q != 0) continue;
      auto h = AbelianGroup::Cyclic(q);
      for (Int a = 1; a < m; ++a) {
        for (Int b = a + 1; b < m; ++b) {
          std::set<Int> images;
          for (Int x : {a % q, b % q}) {
            if (x != 0) images.insert(x);
          }
          if (images.empty()) continue;
          std::vector<GroupElement> image_gens;
          for (Int x : images) image_gens.push_back(h.element({x}));
          auto top = BfsProfile(g, Cyc(g, {a, b}));
          auto bottom = BfsProfile(h, GeneratingSet(h, image_gens));
          for (Int v = 0; v < m; ++v) {
            int dv = top.dist[static_cast<std::size_t>(v)];
            if (dv < 0) continue;
            int dq = bottom.dist[static_cast<std::size_t>(v % q)];
            REQUIRE(dq >= 0);
            REQUIRE(dq <= dv);
          }
        }
      }
    }
  }
}

TEST_CASE("certificates are sound for every generating 2-set of order <= 24") {
  for (Int m = 3; m <= 24; ++m) {
    for (const auto& g : EnumerateAbelianGroups(m)) {
      auto all = g.elements();
      for (std::size_t i = 1; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
          GeneratingSet gens(g, {all[i], all[j]});
          auto profile = BfsProfile(g, gens);
          if (!profile.generates()) continue;
          for (const auto& t : all) CheckCertificate(g, gens, profile, t);
        }
      }
    }
  }
}
