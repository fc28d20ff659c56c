#ifndef NUMOID_FALSIFIER_HPP
#define NUMOID_FALSIFIER_HPP

#include "numoid/closedform.hpp"
#include "numoid/families.hpp"
#include "numoid/invariants.hpp"
#include "numoid/linalg.hpp"
#include "numoid/polynomial.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace numoid {

enum class FormulaKind { Explicit, Implicit };
enum class InvariantName { Catenary, Tame, Elasticity };

constexpr std::string_view to_string(FormulaKind k) noexcept {
  return k == FormulaKind::Explicit ? "explicit" : "implicit";
}

constexpr std::string_view to_string(InvariantName n) noexcept {
  switch (n) {
    case InvariantName::Catenary: return "catenary";
    case InvariantName::Tame: return "tame";
    case InvariantName::Elasticity: return "elasticity";
  }
  return "unknown";
}

inline constexpr std::array<std::string_view, 3> kAtomVariables{"X1", "X2", "X3"};
inline constexpr std::array<std::string_view, 4> kImplicitVariables{"X1", "X2", "X3", "Y"};

/// Explicit: f_1..f_s in X1..X3, one of which must equal the invariant.
/// Implicit: a nonzero F in X1..X3, Y with F(atoms, invariant) = 0.
struct FormulaCandidate {
  FormulaKind kind = FormulaKind::Explicit;
  std::vector<Polynomial> polynomials;
  std::string source;

  std::string to_string() const {
    std::string out;
    for (const auto& p : polynomials) {
      if (!out.empty()) out += "; ";
      out += kind == FormulaKind::Explicit ? p.to_string(kAtomVariables) : p.to_string(kImplicitVariables);
    }
    return out;
  }
};

/// Grammar: polynomials over the rationals in X1, X2, X3 (and Y for implicit
/// candidates) with + - * ( ) and ^ by nonnegative integers; literals are
/// integers or a/b. Explicit lists are separated by ';'.
inline FormulaCandidate parse_formula(std::string_view text, FormulaKind kind) {
  FormulaCandidate out{kind, {}, std::string(text)};
  if (kind == FormulaKind::Implicit) {
    if (auto semi = text.find(';'); semi != std::string_view::npos)
      throw Error(ErrorCode::ParseError, "implicit formula takes a single polynomial", semi);
    Polynomial f = parse_polynomial(text, kImplicitVariables);
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "implicit formula is the zero polynomial");
    out.polynomials.push_back(std::move(f));
    return out;
  }
  std::size_t start = 0;
  for (;;) {
    const std::size_t semi = text.find(';', start);
    const std::size_t end = semi == std::string_view::npos ? text.size() : semi;
    out.polynomials.push_back(parse_polynomial(text.substr(start, end - start), kAtomVariables, start));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

/// Brute-force value of the named invariant.
inline Rational compute_invariant(const NumericalMonoid& monoid, InvariantName name) {
  switch (name) {
    case InvariantName::Catenary: return Rational(catenary(monoid));
    case InvariantName::Tame: return Rational(tame(monoid));
    case InvariantName::Elasticity: return elasticity(monoid);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown invariant");
}

/// Atoms padded to three coordinates with 0, the additive identity.
inline std::array<Rational, 3> padded_atoms(const NumericalMonoid& monoid) {
  if (monoid.embedding_dimension() > 3)
    throw Error(ErrorCode::TooManyAtoms, "<" + monoid.to_string() + "> has more than 3 atoms");
  std::array<Rational, 3> out{Rational(0), Rational(0), Rational(0)};
  auto atoms = monoid.atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i) out[i] = atoms[i];
  return out;
}

struct EvaluationRecord {
  bool matches = false;
  /// Explicit: f_i(atoms) for each i. Implicit: the single residual F(atoms, value).
  std::vector<Rational> values;
};

inline EvaluationRecord evaluate_candidate(const FormulaCandidate& c, const NumericalMonoid& monoid,
                                           const Rational& actual) {
  const auto atoms = padded_atoms(monoid);
  EvaluationRecord rec;
  if (c.kind == FormulaKind::Explicit) {
    for (const auto& f : c.polynomials) {
      rec.values.push_back(f.evaluate(atoms));
      if (rec.values.back() == actual) rec.matches = true;
    }
  } else {
    const std::array<Rational, 4> point{atoms[0], atoms[1], atoms[2], actual};
    rec.values.push_back(c.polynomials.front().evaluate(point));
    rec.matches = rec.values.back() == 0;
  }
  return rec;
}

inline bool eval_candidate(const FormulaCandidate& c, const NumericalMonoid& monoid, InvariantName name) {
  padded_atoms(monoid);
  return evaluate_candidate(c, monoid, compute_invariant(monoid, name)).matches;
}

/// F = prod_i (f_i - Y).
inline FormulaCandidate explicit_to_implicit(const FormulaCandidate& c) {
  if (c.kind != FormulaKind::Explicit)
    throw Error(ErrorCode::InvalidArgument, "explicit_to_implicit needs an explicit candidate");
  const Polynomial y = Polynomial::variable(4, 3);
  Polynomial product = Polynomial::constant(4, Rational(1));
  for (const auto& f : c.polynomials) product = product * (f.widened(4) - y);
  FormulaCandidate out{FormulaKind::Implicit, {product}, c.source};
  out.source = out.to_string();
  return out;
}

// ---------------------------------------------------------------------------
// Counterexample search

struct Counterexample {
  NumericalMonoid monoid;
  InvariantName invariant = InvariantName::Catenary;
  Rational actual;
  EvaluationRecord evaluation;
  /// Position of the monoid in the search order (1-based).
  Int examined = 0;
};

struct NotFoundWithinBudget {
  Int examined = 0;
};

using FalsifyResult = std::variant<Counterexample, NotFoundWithinBudget>;

struct FalsifyBudget {
  Int max_monoids = 50;
  Int samples_per_stratum = 4;
  /// Monoids searched before the family sweep.
  std::vector<NumericalMonoid> seeds = {new_monoid({3, 5, 7})};
};

/// Deterministic stream of test monoids: the seeds, then for h1 = 7, 11, 13, ...
/// and each k in [2, (h1-1)/2], the first hits of the prime search with
/// alpha = h1 - k + 1/2 (the window midpoint), epsilon = 1/2, i = 1 and
/// j = h1 - k + 1. Family members carry their closed-form value.
class FamilySweep {
 public:
  struct Item {
    NumericalMonoid monoid;
    std::optional<Int> closed_form;
    std::optional<Int> k;
  };

  FamilySweep(std::vector<NumericalMonoid> seeds, Int samples_per_stratum)
      : seeds_(std::move(seeds)), samples_(samples_per_stratum) {}

  Item next() {
    if (seed_index_ < seeds_.size()) return {seeds_[seed_index_++], std::nullopt, std::nullopt};
    for (;;) {
      if (!search_ || taken_ >= samples_) advance_stratum();
      auto hit = search_->next();
      if (!hit) {
        taken_ = samples_;
        continue;
      }
      const Int x = hit->x;
      const Int y = hit->y;
      if (!(h1_ < x && x < y)) continue;
      auto monoid = new_monoid({h1_, x, y});
      if (monoid.embedding_dimension() != 3) continue;
      ++taken_;
      return {monoid, cat3(monoid).value, k_};
    }
  }

 private:
  void advance_stratum() {
    if (h1_ == 0 || 2 * (k_ + 1) > h1_ - 1) {
      h1_ = h1_ == 0 ? 7 : next_prime_in_class(h1_ + 1, 1, 2);
      k_ = 2;
    } else {
      ++k_;
    }
    search_.emplace(DirichletQuery{Rational(2 * (h1_ - k_) + 1, 2), Rational(1, 2), h1_, 1, h1_ - k_ + 1, 10000});
    taken_ = 0;
  }

  std::vector<NumericalMonoid> seeds_;
  Int samples_;
  std::size_t seed_index_ = 0;
  Int h1_ = 0;
  Int k_ = 0;
  Int taken_ = 0;
  std::optional<DirichletSearch> search_;
};

/// Search the sweep for a monoid on which the candidate fails. A hit is
/// re-verified with a fresh brute-force computation before it is returned.
inline FalsifyResult falsify(const FormulaCandidate& c, InvariantName name, const FalsifyBudget& budget = {}) {
  FamilySweep sweep(budget.seeds, budget.samples_per_stratum);
  for (Int n = 1; n <= budget.max_monoids; ++n) {
    auto item = sweep.next();
    Rational actual;
    if (name == InvariantName::Elasticity)
      actual = elasticity(item.monoid);
    else if (item.closed_form)
      actual = *item.closed_form;
    else
      actual = compute_invariant(item.monoid, name);
    auto rec = evaluate_candidate(c, item.monoid, actual);
    if (rec.matches) continue;

    const Rational fresh = compute_invariant(item.monoid, name);
    auto recheck = evaluate_candidate(c, item.monoid, fresh);
    if (fresh != actual || recheck.matches)
      throw Error(ErrorCode::CrossCheckFailed,
                  "closed-form value disagrees with brute force on <" + item.monoid.to_string() + ">");
    return Counterexample{item.monoid, name, fresh, std::move(recheck), n};
  }
  return NotFoundWithinBudget{budget.max_monoids};
}

// ---------------------------------------------------------------------------
// Degree certificates

enum class CertificateOutcome { Certified, CertifiedAfterFalsification, Inconclusive };

constexpr std::string_view to_string(CertificateOutcome o) noexcept {
  switch (o) {
    case CertificateOutcome::Certified: return "Certified";
    case CertificateOutcome::CertifiedAfterFalsification: return "CertifiedAfterFalsification";
    case CertificateOutcome::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

struct DataPoint {
  Int k = 0;
  Int h2 = 0;
  Int h3 = 0;
  Int value = 0;
};

struct Refutation {
  /// Annihilator of the sampled data, as a polynomial in X2, X3, Y.
  std::string polynomial;
  /// First fresh point where it does not vanish.
  std::optional<DataPoint> failing_point;
};

struct DegreeCertificate {
  Int h1 = 0;
  unsigned degree = 0;
  std::vector<Int> strata_used;
  Int sample_points = 0;
  CertificateOutcome outcome = CertificateOutcome::Inconclusive;
  /// Monomials X2^a X3^b Y^c indexing the matrix columns.
  std::vector<std::array<unsigned, 3>> monomials;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  std::vector<DataPoint> fresh_points;
  /// Rank after the fresh points were appended (equals `rank` if none).
  std::size_t final_rank = 0;
  std::vector<Refutation> refutations;
  std::string advice;
};

struct CertificateOptions {
  /// Rounds of fresh points (one per stratum per round) before giving up.
  Int fresh_rounds = 8;
};

/// All (a, b, c) with a + b + c <= d, by total degree, then lexicographically.
inline std::vector<std::array<unsigned, 3>> monomials_up_to(unsigned d) {
  std::vector<std::array<unsigned, 3>> out;
  for (unsigned t = 0; t <= d; ++t)
    for (unsigned a = t + 1; a-- > 0;)
      for (unsigned b = t - a + 1; b-- > 0;) out.push_back({a, b, t - a - b});
  return out;
}

inline std::vector<BigInt> monomial_row(const std::vector<std::array<unsigned, 3>>& monomials, const DataPoint& p) {
  std::vector<BigInt> row;
  row.reserve(monomials.size());
  for (const auto& m : monomials) {
    row.push_back(boost::multiprecision::pow(BigInt(p.h2), m[0]) * boost::multiprecision::pow(BigInt(p.h3), m[1]) *
                  boost::multiprecision::pow(BigInt(p.value), m[2]));
  }
  return row;
}

inline std::string annihilator_to_string(const std::vector<std::array<unsigned, 3>>& monomials,
                                         const std::vector<BigInt>& coeffs) {
  Polynomial p(3);
  for (std::size_t i = 0; i < monomials.size(); ++i)
    p.add_term({monomials[i][0], monomials[i][1], monomials[i][2]}, Rational(coeffs[i]));
  constexpr std::array<std::string_view, 3> names{"X2", "X3", "Y"};
  return p.to_string(names);
}

/// Exact evidence that no nonzero polynomial G(X2, X3, Y) of total degree <= d
/// vanishes on the points (h2, h3, c(H)) of the dataset, with X1 fixed to h1.
/// Each stratum k contributes `points_per_stratum` points; at least d + 1
/// strata are needed since a product of d + 1 stratum planes has degree d + 1.
inline DegreeCertificate degree_certificate(Int h1, unsigned d, Int points_per_stratum, const StrataDataset& dataset,
                                            const CertificateOptions& options = {}) {
  std::map<Int, std::vector<const StratumRecord*>> by_stratum;
  for (const auto& r : dataset.records) {
    if (r.h1 != h1)
      throw Error(ErrorCode::InvalidArgument, "dataset record has h1=" + std::to_string(r.h1) + ", expected " +
                                                  std::to_string(h1));
    by_stratum[r.k].push_back(&r);
  }
  if (by_stratum.size() < d + 1)
    throw Error(ErrorCode::InsufficientStrata, "degree " + std::to_string(d) + " needs " + std::to_string(d + 1) +
                                                   " strata, dataset has " + std::to_string(by_stratum.size()));
  const Int needed = static_cast<Int>((d + 1) * (d + 2) / 2);
  if (points_per_stratum < needed)
    throw Error(ErrorCode::InsufficientPoints, "degree " + std::to_string(d) + " needs at least " +
                                                   std::to_string(needed) + " points per stratum");

  DegreeCertificate cert;
  cert.h1 = h1;
  cert.degree = d;
  cert.sample_points = points_per_stratum;
  cert.monomials = monomials_up_to(d);

  IntMatrix matrix(0, cert.monomials.size());
  std::map<Int, Int> last_h2;
  for (auto& [k, recs] : by_stratum) {
    if (static_cast<Int>(recs.size()) < points_per_stratum)
      throw Error(ErrorCode::InsufficientPoints,
                  "stratum k=" + std::to_string(k) + " has only " + std::to_string(recs.size()) + " records");
    recs.resize(static_cast<std::size_t>(points_per_stratum));
    if (points_per_stratum >= 3 && collinear(recs))
      throw Error(ErrorCode::DegenerateStratum, "points of stratum k=" + std::to_string(k) + " are collinear");
    cert.strata_used.push_back(k);
    for (const auto* r : recs) {
      matrix.append_row(monomial_row(cert.monomials, {k, r->h2, r->h3, r->catenary_value()}));
      last_h2[k] = std::max(last_h2[k], r->h2);
    }
  }
  for (const auto& r : dataset.records) last_h2[r.k] = std::max(last_h2[r.k], r.h2);

  const auto ech = bareiss_echelon(matrix);
  cert.rows = matrix.rows();
  cert.cols = matrix.cols();
  cert.rank = ech.rank();
  cert.pivot_columns = ech.pivot_columns;
  cert.final_rank = cert.rank;
  if (cert.rank == cert.cols) {
    cert.outcome = CertificateOutcome::Certified;
    return cert;
  }

  const auto basis = nullspace(matrix);
  for (const auto& v : basis) cert.refutations.push_back({annihilator_to_string(cert.monomials, v), std::nullopt});

  for (Int round = 1; round <= options.fresh_rounds; ++round) {
    for (Int k : cert.strata_used) {
      auto rec = detail::generate_stratum(h1, k, 1, checked_add(last_h2[k], 1), round, points_per_stratum + 1)[0];
      last_h2[k] = rec.h2;
      const Int value = cat3(rec.monoid()).value;
      if (value != rec.predicted)
        throw Error(ErrorCode::CrossCheckFailed, "fresh record disagrees with closed form");
      const DataPoint point{k, rec.h2, rec.h3, value};
      cert.fresh_points.push_back(point);
      const auto row = monomial_row(cert.monomials, point);
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (cert.refutations[b].failing_point) continue;
        BigInt s = 0;
        for (std::size_t i = 0; i < row.size(); ++i) s += basis[b][i] * row[i];
        if (s != 0) cert.refutations[b].failing_point = point;
      }
      matrix.append_row(row);
    }
    cert.final_rank = rank(matrix);
    if (cert.final_rank == cert.cols) {
      cert.outcome = CertificateOutcome::CertifiedAfterFalsification;
      return cert;
    }
  }
  cert.outcome = CertificateOutcome::Inconclusive;
  cert.advice = "annihilators survive " + std::to_string(cert.fresh_points.size()) +
                " fresh points; raise points_per_stratum or the number of fresh rounds";
  return cert;
}

}  // namespace numoid

#endif  // NUMOID_FALSIFIER_HPP
