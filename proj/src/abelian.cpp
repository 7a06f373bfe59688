#include "cayley/abelian.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "cayley/error.hpp"

namespace cayley {

namespace {

Int Mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int MulMod(Int a, Int b, Int m) {
  return static_cast<Int>(static_cast<__int128>(a) * b % m);
}

// Inverse of a modulo m, gcd(a, m) = 1.
Int InvMod(Int a, Int m) {
  Int old_r = Mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  return Mod(old_s, m);
}

// All partitions of n as non-increasing part lists.
void Partitions(int n, int max_part, std::vector<int>& current,
                std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    current.push_back(p);
    Partitions(n - p, p, current, out);
    current.pop_back();
  }
}

Int Pow(Int base, int e) {
  Int r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace

Int Gcd(Int a, Int b) { return std::gcd(a, b); }

std::vector<std::pair<Int, int>> Factorize(Int n) {
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

AbelianGroup::AbelianGroup(std::vector<Int> moduli) : moduli_(std::move(moduli)) {
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    if (moduli_[j] < 2) {
      throw Error(ErrorCode::kInvalidSpec, "modulus must be >= 2");
    }
    if (j + 1 < moduli_.size() && moduli_[j + 1] % moduli_[j] != 0) {
      throw Error(ErrorCode::kInvalidSpec,
                  "moduli do not form a divisibility chain");
    }
    order_ *= moduli_[j];
  }
}

AbelianGroup AbelianGroup::Cyclic(Int m) {
  if (m < 1) throw Error(ErrorCode::kInvalidSpec, "cyclic order must be >= 1");
  return m == 1 ? AbelianGroup() : AbelianGroup({m});
}

GroupElement AbelianGroup::identity() const {
  return GroupElement(std::vector<Int>(rank(), 0));
}

GroupElement AbelianGroup::element(std::span<const Int> coords) const {
  if (coords.size() != rank()) {
    throw Error(ErrorCode::kInvalidElement, "element rank does not match group");
  }
  std::vector<Int> out(rank());
  for (std::size_t j = 0; j < rank(); ++j) out[j] = Mod(coords[j], moduli_[j]);
  return GroupElement(std::move(out));
}

bool AbelianGroup::contains(const GroupElement& u) const {
  if (u.rank() != rank()) return false;
  for (std::size_t j = 0; j < rank(); ++j) {
    if (u[j] < 0 || u[j] >= moduli_[j]) return false;
  }
  return true;
}

void AbelianGroup::check(const GroupElement& u) const {
  if (!contains(u)) {
    throw Error(ErrorCode::kInvalidElement, "element does not belong to " + name());
  }
}

GroupElement AbelianGroup::add(const GroupElement& u, const GroupElement& v) const {
  check(u);
  check(v);
  std::vector<Int> out(rank());
  for (std::size_t j = 0; j < rank(); ++j) {
    Int s = u[j] + v[j];
    out[j] = s >= moduli_[j] ? s - moduli_[j] : s;
  }
  return GroupElement(std::move(out));
}

GroupElement AbelianGroup::negate(const GroupElement& u) const {
  check(u);
  std::vector<Int> out(rank());
  for (std::size_t j = 0; j < rank(); ++j) out[j] = Mod(moduli_[j] - u[j], moduli_[j]);
  return GroupElement(std::move(out));
}

GroupElement AbelianGroup::scale(const GroupElement& u, Int c) const {
  check(u);
  std::vector<Int> out(rank());
  for (std::size_t j = 0; j < rank(); ++j) {
    out[j] = MulMod(u[j], Mod(c, moduli_[j]), moduli_[j]);
  }
  return GroupElement(std::move(out));
}

Int AbelianGroup::encode(const GroupElement& u) const {
  check(u);
  Int index = 0, radix = 1;
  for (std::size_t j = 0; j < rank(); ++j) {
    index += u[j] * radix;
    radix *= moduli_[j];
  }
  return index;
}

GroupElement AbelianGroup::decode(Int index) const {
  if (index < 0 || index >= order_) {
    throw Error(ErrorCode::kInvalidElement, "index out of range");
  }
  std::vector<Int> out(rank());
  for (std::size_t j = 0; j < rank(); ++j) {
    out[j] = index % moduli_[j];
    index /= moduli_[j];
  }
  return GroupElement(std::move(out));
}

std::vector<GroupElement> AbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  std::vector<Int> coords(rank(), 0);
  for (Int n = 0; n < order_; ++n) {
    out.emplace_back(coords);
    // Last coordinate varies fastest.
    for (std::size_t j = rank(); j-- > 0;) {
      if (++coords[j] < moduli_[j]) break;
      coords[j] = 0;
    }
  }
  return out;
}

std::string AbelianGroup::name() const {
  if (moduli_.empty()) return "Z1";
  std::ostringstream os;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    if (j > 0) os << 'x';
    os << 'Z' << moduli_[j];
  }
  return os.str();
}

CanonicalForm::CanonicalForm(const GroupSpec& spec) : spec_(spec) {
  // prime -> list of (exponent, source factor)
  std::map<Int, std::vector<std::pair<int, std::size_t>>> by_prime;
  for (std::size_t s = 0; s < spec.factors.size(); ++s) {
    if (spec.factors[s] < 1) {
      throw Error(ErrorCode::kInvalidSpec, "group factor must be positive");
    }
    // Z_1 factors contribute nothing.
    for (auto [p, e] : Factorize(spec.factors[s])) by_prime[p].emplace_back(e, s);
  }
  std::size_t r = 0;
  for (auto& [p, parts] : by_prime) {
    std::stable_sort(parts.begin(), parts.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    r = std::max(r, parts.size());
  }
  std::vector<Int> moduli(r, 1);
  parts_.assign(r, {});
  for (const auto& [p, parts] : by_prime) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::size_t j = r - 1 - i;
      Int q = Pow(p, parts[i].first);
      moduli[j] *= q;
      parts_[j].push_back({parts[i].second, q});
    }
  }
  group_ = AbelianGroup(std::move(moduli));
}

GroupElement CanonicalForm::map(std::span<const Int> spec_coords) const {
  if (spec_coords.size() != spec_.factors.size()) {
    throw Error(ErrorCode::kInvalidElement,
                "element rank does not match the written product");
  }
  std::vector<Int> out(group_.rank(), 0);
  for (std::size_t j = 0; j < group_.rank(); ++j) {
    Int m = group_.modulus(j);
    Int x = 0;
    for (const Part& part : parts_[j]) {
      Int residue = Mod(spec_coords[part.source], part.prime_power);
      Int rest = m / part.prime_power;
      Int term = MulMod(MulMod(residue, rest, m), InvMod(rest % part.prime_power, part.prime_power), m);
      x = (x + term) % m;
    }
    out[j] = x;
  }
  return GroupElement(std::move(out));
}

AbelianGroup Canonicalize(const GroupSpec& spec) { return CanonicalForm(spec).group(); }

std::vector<AbelianGroup> EnumerateAbelianGroups(Int m) {
  if (m <= 0) throw Error(ErrorCode::kInvalidOrder, "group order must be >= 1");
  auto factors = Factorize(m);
  std::vector<std::vector<std::vector<int>>> choices;
  for (auto [p, e] : factors) {
    std::vector<std::vector<int>> parts;
    std::vector<int> current;
    Partitions(e, e, current, parts);
    choices.push_back(std::move(parts));
  }

  std::vector<AbelianGroup> out;
  std::vector<std::size_t> pick(factors.size(), 0);
  std::function<void(std::size_t)> recurse = [&](std::size_t i) {
    if (i == factors.size()) {
      std::size_t r = 0;
      for (std::size_t f = 0; f < factors.size(); ++f) {
        r = std::max(r, choices[f][pick[f]].size());
      }
      std::vector<Int> moduli(r, 1);
      for (std::size_t f = 0; f < factors.size(); ++f) {
        const auto& lambda = choices[f][pick[f]];
        for (std::size_t t = 0; t < lambda.size(); ++t) {
          moduli[r - 1 - t] *= Pow(factors[f].first, lambda[t]);
        }
      }
      out.emplace_back(std::move(moduli));
      return;
    }
    for (pick[i] = 0; pick[i] < choices[i].size(); ++pick[i]) recurse(i + 1);
  };
  recurse(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cayley
