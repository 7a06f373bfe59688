#include "cayley/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "cayley/error.hpp"

namespace cayley {

namespace {

void CheckMembers(const AbelianGroup& g, const GeneratingSet& gens) {
  for (const auto& a : gens.elements()) {
    if (!g.contains(a)) {
      throw Error(ErrorCode::kInvalidInput, "generator does not belong to " + g.name());
    }
  }
}

std::vector<Int> Encode(const AbelianGroup& g, std::span<const GroupElement> elements) {
  std::vector<Int> out;
  out.reserve(elements.size());
  for (const auto& a : elements) out.push_back(g.encode(a));
  return out;
}

}  // namespace

GeneratingSet::GeneratingSet(const AbelianGroup& g, std::vector<GroupElement> elements)
    : elements_(std::move(elements)) {
  for (const auto& a : elements_) {
    if (!g.contains(a)) {
      throw Error(ErrorCode::kInvalidInput, "generator does not belong to " + g.name());
    }
    if (a == g.identity()) {
      throw Error(ErrorCode::kInvalidInput, "generating set contains the identity");
    }
  }
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw Error(ErrorCode::kInvalidInput, "generating set has repeated elements");
  }
}

std::optional<int> DistanceProfile::distance(const GroupElement& v) const {
  int d = dist[static_cast<std::size_t>(group.encode(v))];
  if (d < 0) return std::nullopt;
  return d;
}

std::optional<Rational> DistanceProfile::average() const {
  if (group.order() < 2 || !generates()) return std::nullopt;
  return Rational(total_distance, group.order() - 1);
}

Int DistanceCertificate::length() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), Int{0});
}

BfsEngine::BfsEngine(const AbelianGroup& g)
    : moduli_(g.moduli()),
      order_(g.order()),
      dist_(static_cast<std::size_t>(g.order()), -1) {
  queue_.reserve(static_cast<std::size_t>(order_));
}

Int BfsEngine::step(Int v, Int gen) const {
  if (moduli_.size() == 1) {
    Int s = v + gen;
    return s >= order_ ? s - order_ : s;
  }
  Int out = 0, radix = 1;
  for (Int m : moduli_) {
    Int s = v % m + gen % m;
    if (s >= m) s -= m;
    out += s * radix;
    radix *= m;
    v /= m;
    gen /= m;
  }
  return out;
}

BfsEngine::Result BfsEngine::run(std::span<const Int> gens, int depth_limit) {
  std::fill(dist_.begin(), dist_.end(), -1);
  queue_.clear();
  Result result;
  dist_[0] = 0;
  queue_.push_back(0);
  result.reached = 1;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    Int v = queue_[head];
    int dv = dist_[static_cast<std::size_t>(v)];
    if (dv >= depth_limit) break;
    for (Int a : gens) {
      Int w = step(v, a);
      auto& dw = dist_[static_cast<std::size_t>(w)];
      if (dw >= 0) continue;
      dw = dv + 1;
      queue_.push_back(w);
      ++result.reached;
      result.total += dw;
      result.eccentricity = dw;
    }
  }
  return result;
}

DistanceProfile BfsProfile(const AbelianGroup& g, const GeneratingSet& gens) {
  CheckMembers(g, gens);
  BfsEngine engine(g);
  auto encoded = Encode(g, gens.elements());
  auto result = engine.run(encoded);
  DistanceProfile profile{g, gens, engine.dist(), std::nullopt, result.total, result.reached};
  if (profile.generates()) profile.diameter = result.eccentricity;
  return profile;
}

std::optional<int> Diameter(const AbelianGroup& g, const GeneratingSet& gens) {
  return BfsProfile(g, gens).diameter;
}

bool IsGenerating(const AbelianGroup& g, const GeneratingSet& gens) {
  return BfsProfile(g, gens).generates();
}

std::vector<GroupElement> FarthestSet(const AbelianGroup& g, const GeneratingSet& gens) {
  auto profile = BfsProfile(g, gens);
  if (!profile.diameter) {
    throw Error(ErrorCode::kNotStronglyConnected, "generators do not generate " + g.name());
  }
  std::vector<GroupElement> out;
  for (Int v = 0; v < g.order(); ++v) {
    if (profile.dist[static_cast<std::size_t>(v)] == *profile.diameter) {
      out.push_back(g.decode(v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DistanceCertificate CertifyDistance(const AbelianGroup& g, const GeneratingSet& gens,
                                    const GroupElement& target) {
  CheckMembers(g, gens);
  if (!g.contains(target)) {
    throw Error(ErrorCode::kInvalidInput, "target does not belong to " + g.name());
  }
  const std::size_t k = gens.size();
  auto encoded = Encode(g, gens.elements());

  // suffix[i] holds distances in Cay(G, {a_i, ..., a_k}).
  BfsEngine engine(g);
  std::vector<std::vector<int>> suffix(k);
  for (std::size_t i = 0; i < k; ++i) {
    engine.run(std::span<const Int>(encoded).subspan(i));
    suffix[i] = engine.dist();
  }

  Int r = g.encode(target);
  DistanceCertificate cert{std::vector<Int>(k, 0)};
  if (r == 0) return cert;
  int budget = k > 0 ? suffix[0][static_cast<std::size_t>(r)] : -1;
  if (budget < 0) {
    throw Error(ErrorCode::kNoCertificate, "target is unreachable from the identity");
  }

  // Smallest c_i first keeps the vector lexicographically minimal; the
  // suffix distance says whether the remainder still fits the budget.
  for (std::size_t i = 0; i + 1 < k; ++i) {
    Int back = g.encode(g.negate(gens[i]));
    Int rest = r;
    for (int c = 0; c <= budget; ++c) {
      int d = suffix[i + 1][static_cast<std::size_t>(rest)];
      if (d >= 0 && d == budget - c) {
        cert.coeffs[i] = c;
        budget -= c;
        r = rest;
        break;
      }
      rest = engine.step(rest, back);
    }
  }
  cert.coeffs[k - 1] = budget;
  return cert;
}

Rational AverageDistance(const AbelianGroup& g, const GeneratingSet& gens) {
  if (g.order() < 2) {
    throw Error(ErrorCode::kUndefinedAverage, "average distance needs at least 2 vertices");
  }
  auto profile = BfsProfile(g, gens);
  if (!profile.generates()) {
    throw Error(ErrorCode::kNotStronglyConnected, "generators do not generate " + g.name());
  }
  return *profile.average();
}

}  // namespace cayley
