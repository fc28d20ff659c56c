#include "numoid/closedform.hpp"
#include "numoid/invariants.hpp"

#include <gtest/gtest.h>

using namespace numoid;

namespace {

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::InvalidArgument;
}

using Matrix3 = std::array<std::array<Int, 3>, 3>;

}  // namespace

TEST(Cat2, Examples) {
  EXPECT_EQ(cat2(new_monoid({2, 3})), 3);
  EXPECT_EQ(cat2(new_monoid({3, 5})), 5);
  EXPECT_EQ(cat2(new_monoid({2, 5})), 5);
  EXPECT_EQ(error_of([] { cat2(new_monoid({3, 5, 7})); }), ErrorCode::WrongAtomCount);
}

TEST(Cat2, AgreesWithDefinition) {
  for (Int a = 2; a <= 12; ++a)
    for (Int b = a + 1; b <= 20; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto m = new_monoid({a, b});
      EXPECT_EQ(cat2(m), catenary(m)) << a << "," << b;
      EXPECT_EQ(cat2(m), tame(m)) << a << "," << b;
    }
}

TEST(Cat3, Examples) {
  const auto a = cat3(new_monoid({3, 5, 7}));
  EXPECT_EQ(a.c, (std::array<Int, 3>{4, 2, 2}));
  EXPECT_EQ(a.r, (Matrix3{{{0, 1, 1}, {1, 0, 1}, {3, 1, 0}}}));
  EXPECT_EQ(a.value, 4);

  const auto b = cat3(new_monoid({5, 7, 9}));
  EXPECT_EQ(b.c, (std::array<Int, 3>{5, 2, 3}));
  EXPECT_EQ(b.value, 5);

  const auto c = cat3(new_monoid({7, 29, 160}));
  EXPECT_EQ(c.c, (std::array<Int, 3>{27, 6, 2}));
  EXPECT_EQ(c.r, (Matrix3{{{0, 1, 1}, {2, 0, 1}, {25, 5, 0}}}));
  EXPECT_EQ(c.value, 30);
}

TEST(Cat3, Errors) {
  EXPECT_EQ(error_of([] { cat3(new_monoid({2, 3})); }), ErrorCode::WrongAtomCount);
  EXPECT_EQ(error_of([] { cat3(new_monoid({4, 6, 9})); }), ErrorCode::NotPairwiseCoprime);
}

TEST(Cat3, IdentitiesHold) {
  for (auto g : std::vector<std::vector<Int>>{{3, 5, 7}, {5, 7, 9}, {7, 29, 160}, {7, 29, 146}, {5, 7, 11}, {8, 9, 11}}) {
    const auto f = cat3(new_monoid(g));
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, l = (i + 2) % 3;
      EXPECT_EQ(f.c[i], f.r[j][i] + f.r[l][i]);
      EXPECT_EQ(f.c[i] * f.atoms[i], f.r[i][j] * f.atoms[j] + f.r[i][l] * f.atoms[l]);
      EXPECT_GT(f.r[i][j], 0);
    }
  }
}

TEST(Cat3, MatchesBruteForce) {
  for (auto g : std::vector<std::vector<Int>>{{3, 5, 7}, {5, 7, 9}, {7, 29, 146}, {5, 7, 11}, {8, 9, 11}, {4, 7, 9}}) {
    const auto m = new_monoid(g);
    const auto f = cat3(m);
    EXPECT_EQ(f.value, catenary(m)) << m.to_string();
    EXPECT_EQ(f.value, tame(m)) << m.to_string();
  }
}

TEST(LambdaForms, Identities) {
  for (Int h1 : {7, 11, 13, 17}) {
    for (Int k = 2; 2 * k <= h1 - 1; ++k) {
      const auto f = lambda_forms(h1, k);
      // lambda1 + lambda5 = h2 + 1
      const AffineForm sum{f[0].constant + f[4].constant, f[0].h2 + f[4].h2, f[0].h3 + f[4].h3};
      EXPECT_EQ(sum, (AffineForm{1, 1, 0}));
      EXPECT_EQ(f[1], (AffineForm{h1 - k + 1, 0, 0}));
      EXPECT_EQ(f[2], (AffineForm{2, 0, 0}));
      EXPECT_EQ(f[3], (AffineForm{k, 0, 0}));
    }
  }
}

TEST(Comp3Lambdas, Example) {
  const auto l = comp3_lambdas(7, 2, 29, 160);
  EXPECT_EQ(l.lambda, (std::array<Int, 6>{27, 6, 2, 2, 3, 30}));
  EXPECT_EQ(l.predicted, 30);
  const auto three = comp3_lambdas(7, 3, 29, 131);
  EXPECT_EQ(three.lambda[1], 5);
  EXPECT_EQ(three.lambda[2], 2);
  EXPECT_EQ(three.lambda[3], 3);
  EXPECT_EQ(three.predicted, std::max({three.lambda[0], three.lambda[4], three.lambda[5]}));
}

TEST(Comp3Lambdas, RejectsViolations) {
  EXPECT_EQ(error_of([] { comp3_lambdas(9, 2, 29, 160); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(error_of([] { comp3_lambdas(7, 4, 29, 160); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(error_of([] { comp3_lambdas(7, 2, 31, 160); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(error_of([] { comp3_lambdas(7, 2, 29, 181); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(comp3_violations(7, 2, 29, 181), (std::vector<std::string>{"window"}));
  EXPECT_TRUE(comp3_violations(7, 2, 29, 160).empty());
}

TEST(Comp3Lambdas, DominanceOverSmallForms) {
  // max(lambda1, lambda5) >= h2/2 exceeds lambda2, lambda3, lambda4.
  for (auto [h1, k, h2, h3] : std::vector<std::array<Int, 4>>{{7, 2, 29, 160}, {7, 3, 29, 131}, {13, 6, 53, 398}}) {
    const auto l = comp3_lambdas(h1, k, h2, h3);
    EXPECT_GE(2 * std::max(l.lambda[0], l.lambda[4]), h2);
    for (int i : {1, 2, 3}) EXPECT_GT(std::max(l.lambda[0], l.lambda[4]), l.lambda[i]);
  }
}
