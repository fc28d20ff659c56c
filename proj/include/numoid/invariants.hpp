#ifndef NUMOID_INVARIANTS_HPP
#define NUMOID_INVARIANTS_HPP

#include "numoid/core.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace numoid {

namespace detail {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

// Largest edge of a minimum spanning tree of the complete distance graph on
// `points` (Prim, O(n^2)). This is the least N making the N-distance graph
// connected.
inline Int mst_bottleneck(const std::vector<std::vector<Int>>& points) {
  const std::size_t n = points.size();
  if (n <= 1) return 0;
  std::vector<Int> best(n, std::numeric_limits<Int>::max());
  std::vector<bool> in_tree(n, false);
  best[0] = 0;
  Int bottleneck = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_tree[v] && (pick == n || best[v] < best[pick])) pick = v;
    }
    in_tree[pick] = true;
    bottleneck = std::max(bottleneck, best[pick]);
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_tree[v]) best[v] = std::min(best[v], exponent_distance(points[pick], points[v]));
    }
  }
  return bottleneck;
}

}  // namespace detail

/// Default range for the Betti scan: above F + 2*max(atoms) every n - a - a'
/// lies in the monoid, so the atom graph of n is complete.
inline Int betti_scan_bound(const NumericalMonoid& monoid) {
  return checked_add(monoid.frobenius(), checked_mul(2, monoid.max_atom()));
}

/// c(n): least N such that any two factorizations of n are joined by an
/// N-chain.
inline Int catenary_of_element(const NumericalMonoid& monoid, Int n) {
  if (!monoid.contains(n))
    throw Error(ErrorCode::NotAMember, std::to_string(n) + " is not in <" + monoid.to_string() + ">");
  return detail::mst_bottleneck(factorization_vectors(monoid, n));
}

/// Whether the atom graph of n (vertices: atoms a with n - a in M, edges: a, a'
/// with n - a - a' in M) is disconnected.
inline bool atom_graph_disconnected(const NumericalMonoid& monoid, Int n) {
  auto atoms = monoid.atoms();
  std::vector<std::size_t> vertices;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (monoid.contains(n - atoms[i])) vertices.push_back(i);
  }
  if (vertices.size() < 2) return false;
  detail::DisjointSets sets(vertices.size());
  std::size_t components = vertices.size();
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (monoid.contains(n - atoms[vertices[a]] - atoms[vertices[b]]) && sets.unite(a, b))
        --components;
    }
  }
  return components > 1;
}

inline std::vector<Int> betti_elements(const NumericalMonoid& monoid) {
  std::vector<Int> out;
  const Int bound = betti_scan_bound(monoid);
  for (Int n = 0; n <= bound; ++n) {
    if (monoid.contains(n) && atom_graph_disconnected(monoid, n)) out.push_back(n);
  }
  return out;
}

/// c(H), attained on Betti elements.
inline Int catenary(const NumericalMonoid& monoid) {
  Int best = 0;
  for (Int b : betti_elements(monoid)) best = std::max(best, catenary_of_element(monoid, b));
  return best;
}

/// Local tame degree t(H, u).
///
/// A pair (b, z) qualifies when b - u is in M, z is a factorization of b, and
/// u divides no proper subproduct of z. Checking the subproducts with one atom
/// removed suffices: if u divides a smaller subproduct it divides every larger
/// one. Such b are bounded by u + max(atoms) + F, since b - atoms[i] - u is a
/// gap for some atom in the support of z. A z that already contains u needs
/// no rewriting and contributes 0, which makes t(N0, 1) = 0.
inline Int tame_local(const NumericalMonoid& monoid, Int u) {
  const std::size_t ui = monoid.atom_index(u);
  auto atoms = monoid.atoms();
  const Int bound = checked_add(checked_add(u, monoid.max_atom()), monoid.frobenius());
  Int best = 0;
  std::vector<std::vector<Int>> zs;
  for (Int b = u; b <= bound; ++b) {
    if (!monoid.contains(b - u)) continue;
    zs.clear();
    for_each_factorization(atoms, b, [&](std::span<const Int> e) { zs.emplace_back(e.begin(), e.end()); });

    Int shortest_with_u = std::numeric_limits<Int>::max();
    for (const auto& z : zs) {
      if (z[ui] > 0) shortest_with_u = std::min(shortest_with_u, std::accumulate(z.begin(), z.end(), Int{0}));
    }
    for (const auto& z : zs) {
      if (z[ui] > 0) continue;  // already contains u: distance 0 to itself
      bool minimal = true;
      for (std::size_t i = 0; i < atoms.size() && minimal; ++i) {
        if (z[i] > 0 && monoid.contains(b - atoms[i] - u)) minimal = false;
      }
      if (!minimal) continue;
      const Int len = std::accumulate(z.begin(), z.end(), Int{0});
      best = std::max(best, std::max(len, shortest_with_u));
    }
  }
  return best;
}

inline Int tame(const NumericalMonoid& monoid) {
  Int best = 0;
  for (Int u : monoid.atoms()) best = std::max(best, tame_local(monoid, u));
  return best;
}

/// rho(H) = max(atoms) / min(atoms).
inline Rational elasticity(const NumericalMonoid& monoid) {
  return Rational(monoid.max_atom(), monoid.multiplicity());
}

/// {c(n) : n <= bound, c(n) > 0}. A finite scan, so only part of Ca(H).
inline std::vector<Int> positive_catenary_set(const NumericalMonoid& monoid, Int bound) {
  if (bound < 0) throw Error(ErrorCode::InvalidArgument, "scan bound must be nonnegative");
  std::set<Int> values;
  for (Int n = 0; n <= bound; ++n) {
    if (!monoid.contains(n)) continue;
    const Int c = catenary_of_element(monoid, n);
    if (c > 0) values.insert(c);
  }
  return {values.begin(), values.end()};
}

struct InvariantReport {
  NumericalMonoid monoid;
  Int catenary = 0;
  Int tame = 0;
  Rational elasticity{1};
  std::vector<Int> betti;
  std::map<Int, Int> tame_local;
  std::vector<Int> ca_partial;
  Int scan_bound = 0;
};

/// Full definition-level report. The Ca(H) scan defaults to the Betti bound.
inline InvariantReport invariant_report(const NumericalMonoid& monoid,
                                        std::optional<Int> scan_bound = std::nullopt) {
  InvariantReport report{monoid};
  report.betti = betti_elements(monoid);
  for (Int b : report.betti) report.catenary = std::max(report.catenary, catenary_of_element(monoid, b));
  for (Int u : monoid.atoms()) {
    const Int t = tame_local(monoid, u);
    report.tame_local[u] = t;
    report.tame = std::max(report.tame, t);
  }
  report.elasticity = elasticity(monoid);
  report.scan_bound = scan_bound.value_or(betti_scan_bound(monoid));
  report.ca_partial = positive_catenary_set(monoid, report.scan_bound);
  return report;
}

}  // namespace numoid

#endif  // NUMOID_INVARIANTS_HPP
