#ifndef NUMOID_FAMILIES_HPP
#define NUMOID_FAMILIES_HPP

#include "numoid/closedform.hpp"
#include "numoid/invariants.hpp"

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace numoid {

// ---------------------------------------------------------------------------
// Prime search in arithmetic progressions

struct DirichletQuery {
  Rational alpha;
  Rational epsilon;
  Int p = 0;
  Int i = 0;
  Int j = 0;
  Int max_candidates = 10000;
};

struct DirichletPair {
  Int x = 0;
  Int y = 0;
  /// Number of primes x examined, including the hit.
  Int primes_examined = 0;
};

inline void validate(const DirichletQuery& q) {
  if (q.alpha <= 0) throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
  if (q.epsilon <= 0) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  if (!(q.p > 2 && is_prime(q.p))) throw Error(ErrorCode::InvalidArgument, "p must be an odd prime");
  if (std::gcd(q.i, q.p) != 1 || std::gcd(q.j, q.p) != 1)
    throw Error(ErrorCode::InvalidArgument, "residues i and j must be coprime to p");
  if (q.max_candidates <= 0) throw Error(ErrorCode::InvalidArgument, "candidate budget must be positive");
}

/// Walks the primes x ≡ i (mod p) in ascending order. For each x, y is the
/// integer ≡ j (mod p) nearest to alpha*x (the lower one on a tie); the pair
/// is a hit when |alpha - y/x| < epsilon and gcd(x, y) = 1.
class DirichletSearch {
 public:
  explicit DirichletSearch(DirichletQuery query) : q_(std::move(query)) {
    validate(q_);
    next_x_ = floor_mod(q_.i, q_.p);
  }

  /// The next hit, or nullopt once max_candidates primes have been examined.
  std::optional<DirichletPair> next() {
    while (examined_ < q_.max_candidates) {
      const Int x = next_prime_in_class(next_x_, q_.i, q_.p);
      next_x_ = checked_add(x, 1);
      ++examined_;
      const Int y = nearest_in_class(q_.alpha * x);
      if (y <= 0 || std::gcd(x, y) != 1) continue;
      if (abs(q_.alpha - Rational(y, x)) < q_.epsilon) return DirichletPair{x, y, examined_};
    }
    return std::nullopt;
  }

  Int primes_examined() const noexcept { return examined_; }

 private:
  Int nearest_in_class(const Rational& target) const {
    const Int base = to_int(floor(target));
    const Int lower = base - floor_mod(base - q_.j, q_.p);
    const Int upper = lower + q_.p;
    if (lower <= 0) return upper;
    return (target - lower <= Rational(upper) - target) ? lower : upper;
  }

  DirichletQuery q_;
  Int next_x_ = 0;
  Int examined_ = 0;
};

inline DirichletPair dirichlet_find(const DirichletQuery& q) {
  DirichletSearch search(q);
  if (auto hit = search.next()) return *hit;
  throw Error(ErrorCode::BudgetExhausted,
              "no pair within " + std::to_string(q.max_candidates) + " primes; raise the budget");
}

// ---------------------------------------------------------------------------
// The congruence/window family

enum class Verification { ClosedFormOnly, BruteForceChecked };

constexpr std::string_view to_string(Verification v) noexcept {
  return v == Verification::ClosedFormOnly ? "closed_form_only" : "brute_force_checked";
}

struct StratumRecord {
  Int h1 = 0;
  Int k = 0;
  Int h2 = 0;
  Int h3 = 0;
  std::array<Int, 6> lambda{};
  Int predicted = 0;
  Verification verified = Verification::ClosedFormOnly;
  std::optional<Int> catenary;
  std::optional<Int> tame;

  NumericalMonoid monoid() const { return new_monoid({h1, h2, h3}); }
  /// The invariant value used as data: brute force when available.
  Int catenary_value() const { return catenary.value_or(predicted); }
};

struct Comp3Options {
  /// Lower bound for h2; h2 is always taken larger than h1.
  Int h2_min = 0;
  /// Maximum number of h3 candidates examined; 0 means the whole window.
  Int retries = 0;
  /// Steering target inside (h1-k, h1-k+1): candidates are tried by distance
  /// from alpha*h2, ties toward the smaller one. Defaults to the midpoint.
  std::optional<Rational> alpha;
};

inline bool is_odd_prime(Int n) { return n > 2 && is_prime(n); }

/// Independent re-check of every record invariant. Returns the names of the
/// violated conditions; empty means the record is sound. Minimality is tested
/// by direct search for h3 = a*h1 + b*h2, not through the monoid constructor.
inline std::vector<std::string> audit_record(const StratumRecord& r) {
  std::vector<std::string> bad;
  if (!is_odd_prime(r.h1)) bad.emplace_back("h1_odd_prime");
  if (!is_prime(r.h2)) bad.emplace_back("h2_prime");
  if (r.k < 2 || 2 * r.k > r.h1 - 1) bad.emplace_back("k_range");
  if (r.h1 <= 0 || r.h2 % r.h1 != 1) bad.emplace_back("h2_congruence");
  if (r.h1 <= 0 || r.h3 % r.h1 != r.h1 - r.k + 1) bad.emplace_back("h3_congruence");
  if (!(r.h2 * (r.h1 - r.k) < r.h3 && r.h3 < r.h2 * (r.h1 - r.k + 1))) bad.emplace_back("window");
  if (std::gcd(r.h1, r.h2) != 1 || std::gcd(r.h1, r.h3) != 1 || std::gcd(r.h2, r.h3) != 1)
    bad.emplace_back("pairwise_coprime");
  bool generated = false;
  for (Int b = 0; b * r.h2 <= r.h3 && !generated; ++b) generated = (r.h3 - b * r.h2) % r.h1 == 0;
  if (generated || !(r.h1 < r.h2 && r.h2 < r.h3)) bad.emplace_back("minimal");
  if (r.h2 < 2 * r.h1 + 1) bad.emplace_back("h2_lower_bound");
  return bad;
}

namespace detail {

inline void check_family_params(Int h1, Int k) {
  if (!is_odd_prime(h1) || h1 < 7)
    throw Error(ErrorCode::PreconditionViolated, "h1 must be an odd prime >= 7, got " + std::to_string(h1));
  if (k < 2 || 2 * k > h1 - 1)
    throw Error(ErrorCode::PreconditionViolated,
                "k must lie in [2, (h1-1)/2] = [2, " + std::to_string((h1 - 1) / 2) + "], got " + std::to_string(k));
}

inline bool h3_is_minimal(Int h1, Int h2, Int h3) {
  const auto pair = new_monoid({h1, h2});
  return !pair.contains(h3);
}

// h3 candidates in the open window (h2(h1-k), h2(h1-k+1)) with h3 ≡ h1-k+1
// (mod h1), ordered by distance from alpha*h2.
inline std::vector<Int> window_candidates(Int h1, Int k, Int h2, const Rational& alpha) {
  const Int lo = checked_mul(h2, h1 - k);
  const Int hi = checked_mul(h2, h1 - k + 1);
  const Int residue = h1 - k + 1;
  std::vector<Int> out;
  for (Int x = lo + 1 + floor_mod(residue - (lo + 1), h1); x < hi; x += h1) out.push_back(x);
  const Rational target = alpha * h2;
  std::stable_sort(out.begin(), out.end(), [&](Int a, Int b) { return abs(target - a) < abs(target - b); });
  return out;
}

}  // namespace detail

/// One member of the (h1, k) stratum. h2 is the smallest prime ≡ 1 (mod h1)
/// with h2 >= max(h2_min, h1 + 1); h3 is the window candidate closest to
/// alpha*h2 that is coprime to h2 and not in <h1, h2>.
inline StratumRecord comp3_generate(Int h1, Int k, const Comp3Options& options = {}) {
  detail::check_family_params(h1, k);
  const Rational alpha = options.alpha.value_or(Rational(2 * (h1 - k) + 1, 2));
  if (!(alpha > h1 - k && alpha < h1 - k + 1))
    throw Error(ErrorCode::PreconditionViolated, "alpha must lie strictly inside (h1-k, h1-k+1)");
  StratumRecord rec{h1, k};
  rec.h2 = next_prime_in_class(std::max(options.h2_min, h1 + 1), 1, h1);

  Int tried = 0;
  for (Int h3 : detail::window_candidates(h1, k, rec.h2, alpha)) {
    if (options.retries > 0 && tried >= options.retries) break;
    ++tried;
    if (std::gcd(h3, rec.h2) != 1 || !detail::h3_is_minimal(h1, rec.h2, h3)) continue;
    rec.h3 = h3;
    const auto lam = comp3_lambdas(h1, k, rec.h2, h3);
    rec.lambda = lam.lambda;
    rec.predicted = lam.predicted;
    return rec;
  }
  throw Error(ErrorCode::NoCandidate, "no admissible h3 for h1=" + std::to_string(h1) + " k=" + std::to_string(k) +
                                          " h2=" + std::to_string(rec.h2) + " after " + std::to_string(tried) +
                                          " candidates");
}

/// Compute catenary and tame degree from their definitions and compare them
/// with the prediction; throws CrossCheckFailed on disagreement.
inline void brute_force_check(StratumRecord& rec) {
  const auto monoid = rec.monoid();
  rec.catenary = catenary(monoid);
  rec.tame = tame(monoid);
  rec.verified = Verification::BruteForceChecked;
  if (*rec.catenary != rec.predicted || *rec.tame != rec.predicted)
    throw Error(ErrorCode::CrossCheckFailed,
                "<" + monoid.to_string() + ">: predicted " + std::to_string(rec.predicted) + ", catenary " +
                    std::to_string(*rec.catenary) + ", tame " + std::to_string(*rec.tame));
}

struct StrataDataset {
  Int h1 = 0;
  Int per_stratum = 0;
  Rational crosscheck_fraction{0};
  Int h2_min = 0;
  /// Generation is deterministic; the seed is recorded for provenance only.
  Int seed = 0;
  /// Ordered by (k, h2, h3).
  std::vector<StratumRecord> records;

  std::vector<Int> strata() const {
    std::vector<Int> ks;
    for (const auto& r : records) {
      if (ks.empty() || ks.back() != r.k) ks.push_back(r.k);
    }
    return ks;
  }
};

/// Whether all (h2, h3) points lie on one line.
inline bool collinear(const std::vector<const StratumRecord*>& points) {
  if (points.size() < 3) return true;
  const auto& a = *points[0];
  for (std::size_t i = 1; i < points.size(); ++i) {
    const auto& b = *points[i];
    if (b.h2 == a.h2 && b.h3 == a.h3) continue;
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const auto& c = *points[j];
      const BigInt cross = BigInt(b.h2 - a.h2) * (c.h3 - a.h3) - BigInt(b.h3 - a.h3) * (c.h2 - a.h2);
      if (cross != 0) return false;
    }
    return true;
  }
  return true;
}

namespace detail {

// Steering target for sample s of n in stratum k: spread across the window
// so that points of one stratum are not collinear.
inline Rational sample_alpha(Int h1, Int k, Int s, Int n) {
  return Rational(h1 - k) + Rational(s + 1, n + 1);
}

inline std::vector<StratumRecord> generate_stratum(Int h1, Int k, Int count, Int h2_start, Int first_index,
                                                   Int spread) {
  std::vector<StratumRecord> out;
  Int h2 = next_prime_in_class(std::max(h2_start, h1 + 1), 1, h1);
  for (Int s = 0; static_cast<Int>(out.size()) < count; ++s) {
    Comp3Options opts;
    opts.h2_min = h2;
    opts.alpha = sample_alpha(h1, k, (first_index + s) % spread, spread);
    try {
      out.push_back(comp3_generate(h1, k, opts));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoCandidate) throw;
    }
    h2 = next_prime_in_class(checked_add(h2, 1), 1, h1);
  }
  return out;
}

}  // namespace detail

/// Stratified sample of the (h1, k) family for every k in [2, (h1-1)/2]. Each
/// stratum gets `per_stratum` records on successive primes h2 with steered h3;
/// the first ceil(fraction * per_stratum) records of each stratum are checked
/// by brute force.
inline StrataDataset strata_dataset(Int h1, Int per_stratum, const Rational& crosscheck_fraction, Int h2_min = 0) {
  if (!is_odd_prime(h1) || h1 < 7)
    throw Error(ErrorCode::PreconditionViolated, "h1 must be an odd prime >= 7");
  if (per_stratum <= 0) throw Error(ErrorCode::InvalidArgument, "per_stratum must be positive");
  if (crosscheck_fraction < 0 || crosscheck_fraction > 1)
    throw Error(ErrorCode::InvalidArgument, "crosscheck fraction must lie in [0, 1]");

  StrataDataset ds{h1, per_stratum, crosscheck_fraction, h2_min};
  const Int checked = to_int(-floor(-crosscheck_fraction * per_stratum));
  for (Int k = 2; 2 * k <= h1 - 1; ++k) {
    auto recs = detail::generate_stratum(h1, k, per_stratum, h2_min, 0, per_stratum);
    std::vector<const StratumRecord*> view;
    for (const auto& r : recs) view.push_back(&r);
    // Degenerate sample: replace the last record by one on a later prime.
    for (Int extra = 1; per_stratum >= 3 && collinear(view); ++extra) {
      if (extra > 64) throw Error(ErrorCode::DegenerateStratum, "cannot find non-collinear points");
      recs.back() = detail::generate_stratum(h1, k, 1, recs.back().h2 + extra * h1, extra, per_stratum + 1)[0];
    }
    for (Int s = 0; s < checked; ++s) brute_force_check(recs[static_cast<std::size_t>(s)]);
    ds.records.insert(ds.records.end(), recs.begin(), recs.end());
  }
  return ds;
}

// ---------------------------------------------------------------------------
// CSV

inline constexpr std::string_view kDatasetHeader =
    "h1,k,h2,h3,lambda1,lambda2,lambda3,lambda4,lambda5,lambda6,predicted,catenary,tame,verified";

inline void write_csv(std::ostream& out, const std::vector<StratumRecord>& records) {
  out << kDatasetHeader << '\n';
  for (const auto& r : records) {
    out << r.h1 << ',' << r.k << ',' << r.h2 << ',' << r.h3;
    for (Int l : r.lambda) out << ',' << l;
    out << ',' << r.predicted << ',';
    if (r.catenary) out << *r.catenary;
    out << ',';
    if (r.tame) out << *r.tame;
    out << ',' << to_string(r.verified) << '\n';
  }
}

namespace detail {

inline Int parse_int_field(const std::string& s, std::size_t line) {
  std::size_t used = 0;
  Int v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size())
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": bad integer '" + s + "'");
  return v;
}

}  // namespace detail

/// Read a dataset CSV, re-auditing each record and recomputing its lambdas.
inline std::vector<StratumRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kDatasetHeader)
    throw Error(ErrorCode::ParseError, "dataset CSV header mismatch");
  std::vector<StratumRecord> out;
  for (std::size_t lineno = 2; std::getline(in, line); ++lineno) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 14)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 14 fields");
    StratumRecord r;
    r.h1 = detail::parse_int_field(f[0], lineno);
    r.k = detail::parse_int_field(f[1], lineno);
    r.h2 = detail::parse_int_field(f[2], lineno);
    r.h3 = detail::parse_int_field(f[3], lineno);
    for (std::size_t i = 0; i < 6; ++i) r.lambda[i] = detail::parse_int_field(f[4 + i], lineno);
    r.predicted = detail::parse_int_field(f[10], lineno);
    if (!f[11].empty()) r.catenary = detail::parse_int_field(f[11], lineno);
    if (!f[12].empty()) r.tame = detail::parse_int_field(f[12], lineno);
    if (f[13] == "brute_force_checked")
      r.verified = Verification::BruteForceChecked;
    else if (f[13] != "closed_form_only")
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad verified value");
    if (auto bad = audit_record(r); !bad.empty())
      throw Error(ErrorCode::PreconditionViolated, "line " + std::to_string(lineno) + ": record fails " + bad[0]);
    const auto lam = comp3_lambdas(r.h1, r.k, r.h2, r.h3);
    if (lam.lambda != r.lambda || lam.predicted != r.predicted)
      throw Error(ErrorCode::PreconditionViolated, "line " + std::to_string(lineno) + ": lambda values disagree");
    out.push_back(r);
  }
  return out;
}

}  // namespace numoid

#endif  // NUMOID_FAMILIES_HPP
