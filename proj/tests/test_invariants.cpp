#include "numoid/invariants.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace numoid;

namespace {

std::vector<Int> atoms_of(const NumericalMonoid& m) { return {m.atoms().begin(), m.atoms().end()}; }

// Catenary degree straight from the definition: every element up to the scan
// bound, each by the chain oracle.
Int chain_scan(const NumericalMonoid& m, Int limit) {
  Int best = 0;
  for (Int n = 0; n <= limit; ++n) best = std::max(best, oracle::chain_catenary(oracle::factorizations(atoms_of(m), n)));
  return best;
}

std::vector<NumericalMonoid> corpus() {
  std::vector<NumericalMonoid> out;
  for (auto g : std::vector<std::vector<Int>>{{1}, {2, 3}, {2, 5}, {3, 5}, {3, 5, 7}, {4, 6, 9}, {5, 7, 9}, {4, 5, 6},
                                               {6, 10, 15}, {4, 5, 6, 7}, {5, 6, 7, 8, 9}, {3, 7}, {7, 8, 9}})
    out.push_back(new_monoid(g));
  return out;
}

}  // namespace

TEST(CatenaryOfElement, Examples) {
  const auto m = new_monoid({3, 5, 7});
  EXPECT_EQ(catenary_of_element(m, 12), 4);
  EXPECT_EQ(catenary_of_element(m, 3), 0);
  EXPECT_EQ(catenary_of_element(m, 10), 2);
  EXPECT_THROW(catenary_of_element(m, 4), Error);
}

TEST(CatenaryOfElement, MatchesChainOracle) {
  for (const auto& m : corpus()) {
    for (Int n = 0; n <= betti_scan_bound(m); ++n) {
      if (!m.contains(n)) continue;
      EXPECT_EQ(catenary_of_element(m, n), oracle::chain_catenary(oracle::factorizations(atoms_of(m), n)))
          << "<" << m.to_string() << "> n=" << n;
    }
  }
}

TEST(BettiElements, Examples) {
  EXPECT_EQ(betti_elements(new_monoid({3, 5, 7})), (std::vector<Int>{10, 12, 14}));
  EXPECT_TRUE(betti_elements(new_monoid({1})).empty());
  EXPECT_EQ(betti_elements(new_monoid({2, 3})), (std::vector<Int>{6}));
}

TEST(Catenary, Examples) {
  EXPECT_EQ(catenary(new_monoid({3, 5, 7})), 4);
  EXPECT_EQ(catenary(new_monoid({1})), 0);
  EXPECT_EQ(catenary(new_monoid({2, 3})), 3);
}

TEST(Catenary, BettiMethodEqualsFullScan) {
  for (const auto& m : corpus()) EXPECT_EQ(catenary(m), chain_scan(m, betti_scan_bound(m))) << m.to_string();
}

TEST(Catenary, StableBeyondScanBound) {
  for (const auto& m : corpus()) {
    const Int limit = betti_scan_bound(m) + 2 * m.max_atom();
    EXPECT_EQ(catenary(m), chain_scan(m, limit)) << m.to_string();
  }
}

TEST(TameLocal, Examples) {
  const auto m = new_monoid({3, 5, 7});
  EXPECT_EQ(tame_local(m, 7), 4);
  EXPECT_EQ(tame_local(new_monoid({1}), 1), 0);
  // Oracle value for u = 3, scanning b <= 3 + 7 + 4.
  EXPECT_EQ(oracle::tame_local({3, 5, 7}, 0, 14), 4);
  EXPECT_EQ(tame_local(m, 3), 4);
  EXPECT_THROW(tame_local(m, 4), Error);
}

TEST(TameLocal, MatchesSubproductOracle) {
  for (const auto& m : corpus()) {
    const auto atoms = atoms_of(m);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      const Int limit = atoms[i] + m.max_atom() + std::max<Int>(m.frobenius(), 0) + m.max_atom();
      EXPECT_EQ(tame_local(m, atoms[i]), oracle::tame_local(atoms, i, limit))
          << "<" << m.to_string() << "> u=" << atoms[i];
    }
  }
}

TEST(Tame, Examples) {
  EXPECT_EQ(tame(new_monoid({3, 5, 7})), 4);
  EXPECT_EQ(tame(new_monoid({1})), 0);
  EXPECT_EQ(tame(new_monoid({7, 29, 160})), 30);
}

TEST(Tame, SandwichesCatenary) {
  for (const auto& m : corpus()) {
    const Int c = catenary(m), t = tame(m);
    EXPECT_LE(0, c);
    EXPECT_LE(c, t) << m.to_string();
    EXPECT_EQ(c == 0, m.embedding_dimension() == 1);
    EXPECT_EQ(t == 0, m.embedding_dimension() == 1);
  }
}

TEST(Elasticity, Examples) {
  EXPECT_EQ(elasticity(new_monoid({3, 5, 7})), Rational(7, 3));
  EXPECT_EQ(elasticity(new_monoid({1})), Rational(1));
  EXPECT_EQ(elasticity(new_monoid({7, 29, 160})), Rational(160, 7));
}

TEST(Elasticity, LengthRatioBoundAttained) {
  for (const auto& m : corpus()) {
    const auto atoms = atoms_of(m);
    const Rational rho = elasticity(m);
    for (Int n = 1; n <= m.frobenius() + 3 * m.max_atom(); ++n) {
      const auto zs = oracle::factorizations(atoms, n);
      if (zs.empty()) continue;
      Int lo = oracle::length(zs.front()), hi = lo;
      for (const auto& z : zs) {
        lo = std::min(lo, oracle::length(z));
        hi = std::max(hi, oracle::length(z));
      }
      EXPECT_LE(Rational(hi, lo), rho) << "<" << m.to_string() << "> n=" << n;
    }
    const Int n = m.multiplicity() * m.max_atom();
    const auto zs = oracle::factorizations(atoms, n);
    Int lo = n, hi = 0;
    for (const auto& z : zs) {
      lo = std::min(lo, oracle::length(z));
      hi = std::max(hi, oracle::length(z));
    }
    EXPECT_EQ(Rational(hi, lo), rho) << m.to_string();
  }
}

TEST(PositiveCatenarySet, Examples) {
  EXPECT_EQ(positive_catenary_set(new_monoid({3, 5, 7}), 14), (std::vector<Int>{2, 4}));
  EXPECT_TRUE(positive_catenary_set(new_monoid({1}), 40).empty());
  EXPECT_EQ(positive_catenary_set(new_monoid({2, 3}), 6), (std::vector<Int>{3}));
  EXPECT_THROW(positive_catenary_set(new_monoid({2, 3}), -1), Error);
}

TEST(InvariantReport, FrozenValues) {
  const auto r = invariant_report(new_monoid({2, 3}));
  EXPECT_EQ(r.catenary, 3);
  EXPECT_EQ(r.tame, 3);
  EXPECT_EQ(r.elasticity, Rational(3, 2));
  EXPECT_EQ(r.betti, (std::vector<Int>{6}));
  EXPECT_EQ(r.tame_local, (std::map<Int, Int>{{2, 3}, {3, 3}}));
  EXPECT_EQ(r.ca_partial, (std::vector<Int>{3}));
  EXPECT_EQ(r.scan_bound, 7);

  const auto one = invariant_report(new_monoid({1}));
  EXPECT_EQ(one.catenary, 0);
  EXPECT_EQ(one.tame, 0);
  EXPECT_TRUE(one.betti.empty());
  EXPECT_EQ(one.tame_local, (std::map<Int, Int>{{1, 0}}));
  EXPECT_EQ(one.scan_bound, 1);
}
