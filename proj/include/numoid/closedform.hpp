#ifndef NUMOID_CLOSEDFORM_HPP
#define NUMOID_CLOSEDFORM_HPP

#include "numoid/core.hpp"

#include <array>
#include <string>
#include <vector>

namespace numoid {

/// Two-atom rule: for coprime atoms u < v the only relation is u^v = v^u, so
/// c(H) is the larger exponent, i.e. the larger atom.
inline Int cat2(const NumericalMonoid& monoid) {
  if (monoid.embedding_dimension() != 2)
    throw Error(ErrorCode::WrongAtomCount, "cat2 needs exactly 2 atoms, got <" + monoid.to_string() + ">");
  return monoid.max_atom();
}

/// The c_i / r_ij table of a 3-generated numerical monoid with pairwise
/// coprime atoms, and the common value c(H) = t(H).
struct ClosedForm3 {
  std::array<Int, 3> atoms{};
  std::array<Int, 3> c{};
  /// r[i][j] for i != j; the diagonal is unused and left at 0.
  std::array<std::array<Int, 3>, 3> r{};
  Int value = 0;
};

/// Compute c_i = min{k >= 1 : k h_i in <h_j, h_l>} and the representation
/// c_i h_i = r_ij h_j + r_il h_l. Every representation is enumerated; more than
/// one raises AmbiguousRepresentation.
inline ClosedForm3 cat3(const NumericalMonoid& monoid) {
  if (monoid.embedding_dimension() != 3)
    throw Error(ErrorCode::WrongAtomCount, "cat3 needs exactly 3 atoms, got <" + monoid.to_string() + ">");
  ClosedForm3 out;
  auto atoms = monoid.atoms();
  std::copy(atoms.begin(), atoms.end(), out.atoms.begin());
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (std::gcd(out.atoms[i], out.atoms[j]) != 1)
        throw Error(ErrorCode::NotPairwiseCoprime, "atoms of <" + monoid.to_string() + "> are not pairwise coprime");
    }
  }

  for (int i = 0; i < 3; ++i) {
    const int j = i == 0 ? 1 : 0;
    const int l = i == 2 ? 1 : 2;
    const Int hi = out.atoms[i];
    const Int hj = out.atoms[j];
    const Int hl = out.atoms[l];
    const auto pair = new_monoid({hj, hl});
    Int k = 1;
    while (!pair.contains(checked_mul(k, hi))) ++k;
    out.c[i] = k;

    const Int target = checked_mul(k, hi);
    int found = 0;
    for (Int rl = 0; rl * hl <= target; ++rl) {
      const Int rest = target - rl * hl;
      if (rest % hj != 0) continue;
      if (++found > 1)
        throw Error(ErrorCode::AmbiguousRepresentation,
                    std::to_string(target) + " has several representations over {" + std::to_string(hj) +
                        "," + std::to_string(hl) + "}");
      out.r[i][j] = rest / hj;
      out.r[i][l] = rl;
    }
  }

  out.value = std::max({out.c[0], out.c[1], out.c[2], out.r[0][1] + out.r[0][2], out.r[1][0] + out.r[1][2],
                        out.r[2][0] + out.r[2][1]});
  return out;
}

/// An affine form constant + a*h2 + b*h3 with exact rational coefficients.
struct AffineForm {
  Rational constant{0};
  Rational h2{0};
  Rational h3{0};

  Rational operator()(const Rational& x2, const Rational& x3) const { return constant + h2 * x2 + h3 * x3; }
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// The six forms whose values are c1, c2, c3, r12+r13, r21+r23, r31+r32 on
/// the congruence/window family with parameters (h1, k).
inline std::array<AffineForm, 6> lambda_forms(Int h1, Int k) {
  const Rational p(h1);
  const Rational kk(k);
  const Rational shift = p - 2 * kk + 2;
  std::array<AffineForm, 6> forms;
  forms[0] = {Rational(0), (kk - 1) / p, Rational(1) / p};
  forms[1] = {p - kk + 1, 0, 0};
  forms[2] = {Rational(2), 0, 0};
  forms[3] = {kk, 0, 0};
  // lambda5 = h2 - lambda1 + 1
  forms[4] = {Rational(1), 1 - (kk - 1) / p, -Rational(1) / p};
  forms[5] = {shift, -shift / p, Rational(2) / p};
  return forms;
}

struct Comp3Lambdas {
  std::array<Int, 6> lambda{};
  /// max{lambda1, lambda5, lambda6}, the predicted c(H) = t(H).
  Int predicted = 0;
};

/// Names of the comp3 preconditions that (h1, k, h2, h3) violates.
inline std::vector<std::string> comp3_violations(Int h1, Int k, Int h2, Int h3) {
  std::vector<std::string> bad;
  const bool h1_ok = h1 > 2 && is_prime(h1);
  if (!h1_ok) bad.emplace_back("h1_odd_prime");
  if (!(h2 > 2 && is_prime(h2))) bad.emplace_back("h2_odd_prime");
  if (h1_ok && (k < 2 || 2 * k > h1 - 1)) bad.emplace_back("k_range");
  if (!(h1 < h2 && h2 < h3)) bad.emplace_back("ordering");
  if (h1 > 0 && floor_mod(h2, h1) != 1 % h1) bad.emplace_back("h2_congruence");
  if (h1 > 0 && floor_mod(h3, h1) != floor_mod(h1 - k + 1, h1)) bad.emplace_back("h3_congruence");
  // h1 - k < h3/h2 < h1 - k + 1, compared exactly.
  if (h2 <= 0 || !(Rational(h3, h2) > h1 - k && Rational(h3, h2) < h1 - k + 1)) bad.emplace_back("window");
  if (std::gcd(h3, h1) != 1 || std::gcd(h3, h2) != 1) bad.emplace_back("h3_coprime");
  return bad;
}

inline Comp3Lambdas comp3_lambdas(Int h1, Int k, Int h2, Int h3) {
  if (auto bad = comp3_violations(h1, k, h2, h3); !bad.empty()) {
    std::string flags;
    for (const auto& f : bad) flags += (flags.empty() ? "" : ",") + f;
    throw Error(ErrorCode::PreconditionViolated, "comp3 preconditions failed: " + flags);
  }
  Comp3Lambdas out;
  const auto forms = lambda_forms(h1, k);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const auto v = integral_value(forms[i](h2, h3));
    if (!v)
      throw Error(ErrorCode::NonIntegralLambda,
                  "lambda" + std::to_string(i + 1) + " is not integral at (" + std::to_string(h2) + "," +
                      std::to_string(h3) + ")");
    out.lambda[i] = *v;
  }
  out.predicted = std::max({out.lambda[0], out.lambda[4], out.lambda[5]});
  return out;
}

}  // namespace numoid

#endif  // NUMOID_CLOSEDFORM_HPP
