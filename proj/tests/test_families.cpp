#include "numoid/families.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

using namespace numoid;

namespace {

// Postconditions of a prime-search hit, checked without the library.
void expect_valid(const DirichletQuery& q, const DirichletPair& r) {
  EXPECT_TRUE(is_prime(r.x));
  EXPECT_EQ(r.x % q.p, q.i);
  EXPECT_EQ(r.y % q.p, q.j);
  EXPECT_EQ(std::gcd(r.x, r.y), 1);
  const Rational diff = q.alpha - Rational(r.y, r.x);
  EXPECT_LT(diff < 0 ? Rational(-diff) : diff, q.epsilon);
  EXPECT_LE(r.primes_examined, q.max_candidates);
}

}  // namespace

TEST(Dirichlet, Examples) {
  const DirichletQuery a{Rational(11, 2), Rational(1, 10), 7, 1, 6};
  const auto ra = dirichlet_find(a);
  EXPECT_EQ(ra.x, 29);
  EXPECT_EQ(ra.y, 160);
  expect_valid(a, ra);

  const DirichletQuery b{Rational(11, 2), Rational(1, 2), 7, 1, 6};
  expect_valid(b, dirichlet_find(b));

  const DirichletQuery c{Rational(5), Rational(1, 100), 11, 1, 10};
  const auto rc = dirichlet_find(c);
  EXPECT_EQ(rc.x, 617);
  EXPECT_EQ(rc.y, 3090);
  EXPECT_EQ(rc.primes_examined, 10);
  expect_valid(c, rc);
}

TEST(Dirichlet, BudgetAndValidation) {
  DirichletQuery q{Rational(5), Rational(1, 100), 11, 1, 10, 3};
  try {
    dirichlet_find(q);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExhausted);
  }
  EXPECT_THROW(dirichlet_find({Rational(5), Rational(1, 100), 9, 1, 10}), Error);
  EXPECT_THROW(dirichlet_find({Rational(5), Rational(0), 11, 1, 10}), Error);
  EXPECT_THROW(dirichlet_find({Rational(5), Rational(1, 10), 11, 0, 10}), Error);
}

TEST(Dirichlet, SuccessiveHitsAreValid) {
  const DirichletQuery q{Rational(13, 2), Rational(1, 2), 11, 1, 7};
  DirichletSearch search(q);
  Int last = 0;
  for (int n = 0; n < 10; ++n) {
    auto hit = search.next();
    ASSERT_TRUE(hit);
    expect_valid(q, *hit);
    EXPECT_GT(hit->x, last);
    last = hit->x;
  }
}

TEST(Comp3Generate, Examples) {
  const auto a = comp3_generate(7, 2, {20, 0, std::nullopt});
  EXPECT_EQ(a.h2, 29);
  EXPECT_EQ(a.h3, 160);
  EXPECT_EQ(a.predicted, 30);
  EXPECT_TRUE(audit_record(a).empty());

  const auto b = comp3_generate(7, 3);
  EXPECT_EQ(b.lambda[1], 5);
  EXPECT_EQ(b.lambda[3], 3);
  EXPECT_EQ(b.predicted, std::max({b.lambda[0], b.lambda[4], b.lambda[5]}));
  EXPECT_TRUE(audit_record(b).empty());

  const auto c = comp3_generate(13, 6);
  EXPECT_GT(c.h3, 7 * c.h2);
  EXPECT_LT(c.h3, 8 * c.h2);
  EXPECT_TRUE(audit_record(c).empty());
}

TEST(Comp3Generate, SteeringAndErrors) {
  const auto low = comp3_generate(7, 2, {0, 0, Rational(51, 10)});
  EXPECT_EQ(low.h3, 146);
  EXPECT_EQ(low.predicted, 26);
  EXPECT_THROW(comp3_generate(7, 2, {0, 0, Rational(6)}), Error);
  EXPECT_THROW(comp3_generate(9, 2), Error);
  EXPECT_THROW(comp3_generate(7, 4), Error);
  EXPECT_THROW(comp3_generate(5, 2), Error);
}

TEST(Comp3Generate, PredictionMatchesBruteForce) {
  for (auto [h1, k] : std::vector<std::pair<Int, Int>>{{7, 2}, {7, 3}, {11, 2}, {11, 5}}) {
    auto rec = comp3_generate(h1, k);
    brute_force_check(rec);
    EXPECT_EQ(rec.verified, Verification::BruteForceChecked);
    EXPECT_EQ(rec.catenary, rec.predicted);
    EXPECT_EQ(rec.tame, rec.predicted);
  }
}

TEST(Audit, FlagsBrokenRecords) {
  auto rec = comp3_generate(7, 2);
  rec.h3 = 7 * 29;
  const auto bad = audit_record(rec);
  EXPECT_NE(std::find(bad.begin(), bad.end(), "minimal"), bad.end());
  auto other = comp3_generate(7, 2);
  other.h2 = 43;
  EXPECT_FALSE(audit_record(other).empty());
}

TEST(StrataDataset, Examples) {
  const auto a = strata_dataset(7, 2, Rational(1));
  EXPECT_EQ(a.strata(), (std::vector<Int>{2, 3}));
  ASSERT_EQ(a.records.size(), 4U);
  for (const auto& r : a.records) {
    EXPECT_EQ(r.verified, Verification::BruteForceChecked);
    EXPECT_EQ(r.catenary, r.predicted);
  }

  const auto b = strata_dataset(13, 3, Rational(1, 3));
  EXPECT_EQ(b.strata().size(), 5U);
  EXPECT_EQ(b.records.size(), 15U);
  EXPECT_GE(std::count_if(b.records.begin(), b.records.end(),
                          [](const auto& r) { return r.verified == Verification::BruteForceChecked; }),
            5);

  const auto c = strata_dataset(7, 1, Rational(0));
  for (const auto& r : c.records) {
    EXPECT_EQ(r.verified, Verification::ClosedFormOnly);
    EXPECT_FALSE(r.catenary);
  }
}

TEST(StrataDataset, RecordsAreSoundAndDistinct) {
  const auto ds = strata_dataset(13, 6, Rational(0));
  std::set<std::pair<Int, Int>> seen;
  for (const auto& r : ds.records) {
    EXPECT_TRUE(audit_record(r).empty()) << r.h2 << "," << r.h3;
    EXPECT_TRUE(seen.insert({r.h2, r.h3}).second);
  }
  for (Int k : ds.strata()) {
    std::vector<const StratumRecord*> view;
    for (const auto& r : ds.records)
      if (r.k == k) view.push_back(&r);
    EXPECT_FALSE(collinear(view)) << "k=" << k;
  }
}

TEST(StrataDataset, Validation) {
  EXPECT_THROW(strata_dataset(9, 2, Rational(0)), Error);
  EXPECT_THROW(strata_dataset(7, 0, Rational(0)), Error);
  EXPECT_THROW(strata_dataset(7, 2, Rational(3, 2)), Error);
}

TEST(Csv, RoundTrip) {
  const auto ds = strata_dataset(11, 2, Rational(1, 2));
  std::stringstream buf;
  write_csv(buf, ds.records);
  const auto back = read_csv(buf);
  ASSERT_EQ(back.size(), ds.records.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].h2, ds.records[i].h2);
    EXPECT_EQ(back[i].h3, ds.records[i].h3);
    EXPECT_EQ(back[i].lambda, ds.records[i].lambda);
    EXPECT_EQ(back[i].predicted, ds.records[i].predicted);
    EXPECT_EQ(back[i].catenary, ds.records[i].catenary);
    EXPECT_EQ(back[i].verified, ds.records[i].verified);
  }
}

TEST(Csv, RejectsTamperedRows) {
  std::stringstream buf;
  buf << kDatasetHeader << "\n7,2,29,161,27,6,2,2,3,30,30,,,closed_form_only\n";
  EXPECT_THROW(read_csv(buf), Error);
  std::stringstream bad_header("h1,k\n");
  EXPECT_THROW(read_csv(bad_header), Error);
}
