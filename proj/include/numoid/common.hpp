#ifndef NUMOID_COMMON_HPP
#define NUMOID_COMMON_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace numoid {

/// Machine integer used by the enumeration core. Every arithmetic step that
/// could leave its range goes through checked_add / checked_mul.
using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorCode {
  EmptyInput,
  NonCoprime,
  InvalidArgument,
  Overflow,
  NotAMember,
  MonoidMismatch,
  NotAnAtom,
  WrongAtomCount,
  NotPairwiseCoprime,
  AmbiguousRepresentation,
  PreconditionViolated,
  NonIntegralLambda,
  BudgetExhausted,
  NoCandidate,
  CrossCheckFailed,
  ParseError,
  ZeroPolynomial,
  TooManyAtoms,
  InsufficientStrata,
  InsufficientPoints,
  DegenerateStratum,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonCoprime: return "NonCoprime";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::MonoidMismatch: return "MonoidMismatch";
    case ErrorCode::NotAnAtom: return "NotAnAtom";
    case ErrorCode::WrongAtomCount: return "WrongAtomCount";
    case ErrorCode::NotPairwiseCoprime: return "NotPairwiseCoprime";
    case ErrorCode::AmbiguousRepresentation: return "AmbiguousRepresentation";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NonIntegralLambda: return "NonIntegralLambda";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::NoCandidate: return "NoCandidate";
    case ErrorCode::CrossCheckFailed: return "CrossCheckFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::TooManyAtoms: return "TooManyAtoms";
    case ErrorCode::InsufficientStrata: return "InsufficientStrata";
    case ErrorCode::InsufficientPoints: return "InsufficientPoints";
    case ErrorCode::DegenerateStratum: return "DegenerateStratum";
  }
  return "Unknown";
}

/// The single exception type thrown by the library. `position` is set for
/// parse errors (0-based byte offset into the input).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, "integer overflow in addition");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  return r;
}

/// Narrow an exact integer to Int, throwing Overflow when it does not fit.
inline Int to_int(const BigInt& v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw Error(ErrorCode::Overflow, "value does not fit in 64 bits: " + v.str());
  return static_cast<Int>(v);
}

/// Narrow a rational known to be integral. Returns nullopt if it is not.
inline std::optional<Int> integral_value(const Rational& q) {
  if (boost::multiprecision::denominator(q) != 1) return std::nullopt;
  return to_int(boost::multiprecision::numerator(q));
}

inline Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigInt floor(const Rational& q) {
  return floor_div(boost::multiprecision::numerator(q),
                   boost::multiprecision::denominator(q));
}

template <class T>
T ipow(T base, unsigned exp) {
  T result(1);
  while (exp) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp) base *= base;
  }
  return result;
}

inline std::string to_string(const Rational& q) {
  const auto& den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

}  // namespace detail

/// Deterministic Miller-Rabin; the first twelve prime bases are a proven
/// witness set for every n < 3.3e24, which covers all 64-bit inputs.
inline bool is_prime(Int n) {
  if (n < 2) return false;
  constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  const auto u = static_cast<std::uint64_t>(n);
  for (auto p : small) {
    if (u % p == 0) return u == p;
  }
  std::uint64_t d = u - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (auto a : small) {
    std::uint64_t x = detail::powmod(a, d, u);
    if (x == 1 || x == u - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, u);
      if (x == u - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Smallest prime p >= from with p ≡ residue (mod modulus).
inline Int next_prime_in_class(Int from, Int residue, Int modulus) {
  if (modulus <= 0) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  Int x = from + floor_mod(residue - from, modulus);
  if (std::gcd(residue, modulus) != 1 && !is_prime(x))
    throw Error(ErrorCode::InvalidArgument, "residue class contains at most one prime");
  while (!is_prime(x)) x = checked_add(x, modulus);
  return x;
}

}  // namespace numoid

#endif  // NUMOID_COMMON_HPP
