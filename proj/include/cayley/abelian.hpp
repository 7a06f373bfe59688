#pragma once

// Finite Abelian groups in invariant-factor form Z_{m_1} x ... x Z_{m_r}
// with m_1 | m_2 | ... | m_r. Elements are residue vectors, always reduced.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cayley {

using Int = std::int64_t;

class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<Int> coords) : coords_(std::move(coords)) {}

  const std::vector<Int>& coords() const { return coords_; }
  std::size_t rank() const { return coords_.size(); }
  Int operator[](std::size_t j) const { return coords_[j]; }

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<Int> coords_;
};

class AbelianGroup {
 public:
  // Trivial group.
  AbelianGroup() = default;

  // Validates the divisibility chain; throws kInvalidSpec otherwise. Use
  // Canonicalize() for arbitrary direct products.
  explicit AbelianGroup(std::vector<Int> moduli);

  static AbelianGroup Cyclic(Int m);

  const std::vector<Int>& moduli() const { return moduli_; }
  Int modulus(std::size_t j) const { return moduli_[j]; }
  Int order() const { return order_; }
  std::size_t rank() const { return moduli_.size(); }
  bool is_cyclic() const { return rank() <= 1; }

  GroupElement identity() const;

  // Reduces arbitrary integers (negative allowed) coordinate-wise.
  GroupElement element(std::span<const Int> coords) const;
  GroupElement element(std::initializer_list<Int> coords) const {
    return element(std::span<const Int>(coords.begin(), coords.size()));
  }

  bool contains(const GroupElement& u) const;

  GroupElement add(const GroupElement& u, const GroupElement& v) const;
  GroupElement negate(const GroupElement& u) const;
  GroupElement scale(const GroupElement& u, Int c) const;

  // Mixed-radix index x_1 + m_1 x_2 + m_1 m_2 x_3 + ...
  Int encode(const GroupElement& u) const;
  GroupElement decode(Int index) const;

  // All elements in lexicographic coordinate order.
  std::vector<GroupElement> elements() const;

  // "Z2xZ6"; the trivial group renders as "Z1".
  std::string name() const;

  // Rank first, then moduli lexicographically: Z12 < Z2xZ6.
  friend auto operator<=>(const AbelianGroup& a, const AbelianGroup& b) {
    if (auto c = a.rank() <=> b.rank(); c != 0) return c;
    return a.moduli_ <=> b.moduli_;
  }
  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.moduli_ == b.moduli_;
  }

 private:
  void check(const GroupElement& u) const;

  std::vector<Int> moduli_;
  Int order_ = 1;
};

// A direct product in the order it was written, e.g. (3x, x). Factors of 1
// are trivial and accepted.
struct GroupSpec {
  std::vector<Int> factors;
};

// Canonical form of a GroupSpec together with an explicit isomorphism from
// the written coordinates into the canonical ones. The map splits every
// factor into prime-power parts and reassembles them per invariant factor
// via CRT.
class CanonicalForm {
 public:
  explicit CanonicalForm(const GroupSpec& spec);

  const AbelianGroup& group() const { return group_; }
  const GroupSpec& spec() const { return spec_; }

  // Maps a coordinate vector written against the GroupSpec factors.
  GroupElement map(std::span<const Int> spec_coords) const;
  GroupElement map(std::initializer_list<Int> spec_coords) const {
    return map(std::span<const Int>(spec_coords.begin(), spec_coords.size()));
  }

 private:
  struct Part {
    std::size_t source;  // index into spec factors
    Int prime_power;
  };

  GroupSpec spec_;
  AbelianGroup group_;
  std::vector<std::vector<Part>> parts_;  // per canonical factor
};

AbelianGroup Canonicalize(const GroupSpec& spec);

// Every isomorphism class of order m, in AbelianGroup order.
std::vector<AbelianGroup> EnumerateAbelianGroups(Int m);

inline std::size_t RankOf(const AbelianGroup& g) { return g.rank(); }

// Prime factorization by trial division, ascending primes.
std::vector<std::pair<Int, int>> Factorize(Int n);

Int Gcd(Int a, Int b);

}  // namespace cayley
