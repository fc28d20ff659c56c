#ifndef NUMOID_CORE_HPP
#define NUMOID_CORE_HPP

#include "numoid/common.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <memory>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace numoid {

namespace detail {

inline constexpr Int kUnreachable = std::numeric_limits<Int>::max();

// Least element of <gens> in each residue class mod `modulus`, by Dijkstra
// over residues with one edge r -> r+g (weight g) per generator. Classes the
// generators cannot reach stay at kUnreachable.
inline std::vector<Int> residue_minima(std::span<const Int> gens, Int modulus) {
  std::vector<Int> dist(static_cast<std::size_t>(modulus), kUnreachable);
  using Item = std::pair<Int, Int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (Int g : gens) {
      const Int next = (r + g % modulus) % modulus;
      const Int cand = checked_add(d, g);
      auto& slot = dist[static_cast<std::size_t>(next)];
      if (cand < slot) {
        slot = cand;
        queue.emplace(cand, next);
      }
    }
  }
  return dist;
}

// Upper limit on atoms[0]; the Apéry table is allocated with that many slots.
inline constexpr Int kMaxMultiplicity = Int{1} << 26;

struct MonoidData {
  std::vector<Int> atoms;
  std::vector<Int> apery;
  Int frobenius = -1;
};

}  // namespace detail

/// A numerical monoid given by its minimal generating set. Immutable; copies
/// share the cached Apéry set, so instances are cheap to pass by value.
class NumericalMonoid {
 public:
  /// Reduce `generators` to the minimal generating set and cache the Apéry
  /// set with respect to the multiplicity.
  static NumericalMonoid from_generators(std::span<const Int> generators) {
    if (generators.empty()) throw Error(ErrorCode::EmptyInput, "no generators given");
    std::vector<Int> sorted(generators.begin(), generators.end());
    for (Int g : sorted) {
      if (g <= 0)
        throw Error(ErrorCode::InvalidArgument,
                    "generators must be positive, got " + std::to_string(g));
    }
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    Int g = 0;
    for (Int x : sorted) g = std::gcd(g, x);
    if (g != 1)
      throw Error(ErrorCode::NonCoprime,
                  "generators have gcd " + std::to_string(g) + ", not a numerical monoid");
    if (sorted.front() > detail::kMaxMultiplicity)
      throw Error(ErrorCode::InvalidArgument, "smallest generator too large for enumeration");

    // Ascending order: a generator can only be produced by smaller ones.
    const Int m = sorted.front();
    std::vector<Int> atoms{m};
    std::vector<Int> minima = detail::residue_minima(atoms, m);
    for (std::size_t idx = 1; idx < sorted.size(); ++idx) {
      const Int x = sorted[idx];
      if (minima[static_cast<std::size_t>(x % m)] <= x) continue;
      atoms.push_back(x);
      minima = detail::residue_minima(atoms, m);
    }

    auto data = std::make_shared<detail::MonoidData>();
    data->atoms = std::move(atoms);
    data->apery = std::move(minima);
    data->frobenius = m == 1 ? -1 : *std::max_element(data->apery.begin(), data->apery.end()) - m;
    return NumericalMonoid(std::move(data));
  }

  static NumericalMonoid from_generators(std::initializer_list<Int> generators) {
    return from_generators(std::span<const Int>(generators.begin(), generators.size()));
  }

  std::span<const Int> atoms() const noexcept { return data_->atoms; }
  std::size_t embedding_dimension() const noexcept { return data_->atoms.size(); }
  Int multiplicity() const noexcept { return data_->atoms.front(); }
  Int max_atom() const noexcept { return data_->atoms.back(); }
  Int frobenius() const noexcept { return data_->frobenius; }

  /// Apéry set with respect to the multiplicity, indexed by residue.
  std::span<const Int> apery() const noexcept { return data_->apery; }

  bool contains(Int n) const noexcept {
    if (n < 0) return false;
    return data_->apery[static_cast<std::size_t>(n % multiplicity())] <= n;
  }

  bool is_atom(Int n) const noexcept {
    return std::binary_search(data_->atoms.begin(), data_->atoms.end(), n);
  }

  std::size_t atom_index(Int atom) const {
    auto it = std::lower_bound(data_->atoms.begin(), data_->atoms.end(), atom);
    if (it == data_->atoms.end() || *it != atom)
      throw Error(ErrorCode::NotAnAtom, std::to_string(atom) + " is not an atom of <" + to_string() + ">");
    return static_cast<std::size_t>(it - data_->atoms.begin());
  }

  /// Canonical rendering: comma-separated atoms, e.g. "3,5,7".
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < data_->atoms.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(data_->atoms[i]);
    }
    return out;
  }

  friend bool operator==(const NumericalMonoid& a, const NumericalMonoid& b) {
    return a.data_ == b.data_ || a.data_->atoms == b.data_->atoms;
  }

 private:
  explicit NumericalMonoid(std::shared_ptr<const detail::MonoidData> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const detail::MonoidData> data_;
};

inline NumericalMonoid new_monoid(std::span<const Int> generators) {
  return NumericalMonoid::from_generators(generators);
}

inline NumericalMonoid new_monoid(std::initializer_list<Int> generators) {
  return NumericalMonoid::from_generators(generators);
}

inline bool contains(const NumericalMonoid& monoid, Int n) noexcept { return monoid.contains(n); }

inline Int frobenius(const NumericalMonoid& monoid) noexcept { return monoid.frobenius(); }

/// Apéry set of the monoid with respect to a positive element m.
inline std::vector<Int> apery_set(const NumericalMonoid& monoid, Int m) {
  if (m <= 0 || !monoid.contains(m))
    throw Error(ErrorCode::NotAMember, std::to_string(m) + " is not a positive element of <" +
                                           monoid.to_string() + ">");
  if (m == monoid.multiplicity()) {
    auto a = monoid.apery();
    return {a.begin(), a.end()};
  }
  if (m > detail::kMaxMultiplicity)
    throw Error(ErrorCode::InvalidArgument, "modulus too large for an Apéry table");
  return detail::residue_minima(monoid.atoms(), m);
}

/// An exponent vector over the atoms of a monoid.
class Factorization {
 public:
  Factorization(NumericalMonoid monoid, std::vector<Int> exponents)
      : monoid_(std::move(monoid)), exponents_(std::move(exponents)) {
    if (exponents_.size() != monoid_.embedding_dimension())
      throw Error(ErrorCode::InvalidArgument, "exponent vector length does not match atom count");
    for (Int e : exponents_) {
      if (e < 0) throw Error(ErrorCode::InvalidArgument, "exponents must be nonnegative");
    }
  }

  const NumericalMonoid& monoid() const noexcept { return monoid_; }
  std::span<const Int> exponents() const noexcept { return exponents_; }

  Int value() const {
    Int v = 0;
    auto atoms = monoid_.atoms();
    for (std::size_t i = 0; i < exponents_.size(); ++i)
      v = checked_add(v, checked_mul(exponents_[i], atoms[i]));
    return v;
  }

  Int length() const {
    Int len = 0;
    for (Int e : exponents_) len = checked_add(len, e);
    return len;
  }

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.monoid_ == b.monoid_ && a.exponents_ == b.exponents_;
  }

 private:
  NumericalMonoid monoid_;
  std::vector<Int> exponents_;
};

/// Distance between exponent vectors of equal length: cancel the common part
/// and take the larger remaining length.
inline Int exponent_distance(std::span<const Int> a, std::span<const Int> b) noexcept {
  Int left = 0;
  Int right = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Int common = std::min(a[i], b[i]);
    left += a[i] - common;
    right += b[i] - common;
  }
  return std::max(left, right);
}

inline Int distance(const Factorization& z, const Factorization& w) {
  if (!(z.monoid() == w.monoid()))
    throw Error(ErrorCode::MonoidMismatch, "factorizations belong to different monoids");
  return exponent_distance(z.exponents(), w.exponents());
}

/// Visit every exponent vector e with sum(e[i] * atoms[i]) == n. The last
/// atom's exponent is the outermost loop, so visits come in ascending
/// colexicographic order. The span passed to `visit` is only valid during
/// the call.
template <class Visitor>
void for_each_factorization(std::span<const Int> atoms, Int n, Visitor&& visit) {
  if (n < 0 || atoms.empty()) return;
  std::vector<Int> e(atoms.size(), 0);
  auto descend = [&](auto& self, std::size_t i, Int rest) -> void {
    if (i == 0) {
      if (rest % atoms[0] == 0) {
        e[0] = rest / atoms[0];
        visit(std::span<const Int>(e));
      }
      return;
    }
    for (Int k = 0, used = 0; used <= rest; ++k, used += atoms[i]) {
      e[i] = k;
      self(self, i - 1, rest - used);
    }
    e[i] = 0;
  };
  descend(descend, atoms.size() - 1, n);
}

/// All factorizations of n, duplicate-free, in ascending colexicographic order
/// of exponent vectors. Empty iff n is not in the monoid.
inline std::vector<Factorization> factorizations(const NumericalMonoid& monoid, Int n) {
  std::vector<Factorization> out;
  if (!monoid.contains(n)) return out;
  for_each_factorization(monoid.atoms(), n, [&](std::span<const Int> e) {
    out.emplace_back(monoid, std::vector<Int>(e.begin(), e.end()));
  });
  return out;
}

/// Raw exponent vectors of all factorizations of n (same order as above).
inline std::vector<std::vector<Int>> factorization_vectors(const NumericalMonoid& monoid, Int n) {
  std::vector<std::vector<Int>> out;
  if (!monoid.contains(n)) return out;
  for_each_factorization(monoid.atoms(), n,
                         [&](std::span<const Int> e) { out.emplace_back(e.begin(), e.end()); });
  return out;
}

}  // namespace numoid

#endif  // NUMOID_CORE_HPP
