#pragma once

// Distance analysis of Cayley digraphs Cay(G, A): arcs v -> v + a, a in A.
// Vertex-transitivity means every metric is computed from the identity.

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "cayley/abelian.hpp"

namespace cayley {

using Rational = boost::rational<Int>;

// Distinct non-identity elements, stored sorted. An empty set is accepted
// and generates only the trivial group.
class GeneratingSet {
 public:
  GeneratingSet() = default;
  GeneratingSet(const AbelianGroup& g, std::vector<GroupElement> elements);

  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const GroupElement& operator[](std::size_t i) const { return elements_[i]; }

  friend auto operator<=>(const GeneratingSet&, const GeneratingSet&) = default;
  friend bool operator==(const GeneratingSet&, const GeneratingSet&) = default;

 private:
  std::vector<GroupElement> elements_;
};

struct DistanceProfile {
  AbelianGroup group;
  GeneratingSet gens;
  std::vector<int> dist;  // by mixed-radix index; -1 when unreachable
  std::optional<int> diameter;  // empty when A does not generate
  Int total_distance = 0;
  Int reached = 0;

  bool generates() const { return reached == group.order(); }
  std::optional<int> distance(const GroupElement& v) const;
  // total_distance / (m - 1); empty for m = 1 or a non-generating set.
  std::optional<Rational> average() const;
};

struct DistanceCertificate {
  std::vector<Int> coeffs;  // one per generator, in GeneratingSet order

  Int length() const;
};

DistanceProfile BfsProfile(const AbelianGroup& g, const GeneratingSet& gens);

std::optional<int> Diameter(const AbelianGroup& g, const GeneratingSet& gens);

bool IsGenerating(const AbelianGroup& g, const GeneratingSet& gens);

// Sorted lexicographically. Throws kNotStronglyConnected.
std::vector<GroupElement> FarthestSet(const AbelianGroup& g, const GeneratingSet& gens);

// Shortest word for target; among minimal words the lexicographically
// smallest coefficient vector. Throws kNoCertificate when unreachable.
DistanceCertificate CertifyDistance(const AbelianGroup& g, const GeneratingSet& gens,
                                    const GroupElement& target);

// Throws kUndefinedAverage for m = 1, kNotStronglyConnected otherwise.
Rational AverageDistance(const AbelianGroup& g, const GeneratingSet& gens);

// Reusable BFS over mixed-radix indices for the search loops. Generators
// are passed as indices into the same encoding.
class BfsEngine {
 public:
  static constexpr int kNoLimit = std::numeric_limits<int>::max();

  explicit BfsEngine(const AbelianGroup& g);

  struct Result {
    Int reached = 0;
    int eccentricity = 0;  // largest distance seen
    Int total = 0;
  };

  // Stops expanding once depth_limit is reached, so reached < order means
  // either the set does not generate or the diameter exceeds the limit.
  Result run(std::span<const Int> gens, int depth_limit = kNoLimit);

  const std::vector<int>& dist() const { return dist_; }
  Int order() const { return order_; }
  Int step(Int v, Int gen) const;

 private:
  std::vector<Int> moduli_;
  Int order_;
  std::vector<int> dist_;
  std::vector<Int> queue_;
};

}  // namespace cayley
