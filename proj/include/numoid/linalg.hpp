#ifndef NUMOID_LINALG_HPP
#define NUMOID_LINALG_HPP

#include "numoid/common.hpp"

#include <vector>

namespace numoid {

/// Dense row-major matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const std::vector<BigInt>& row) {
    if (row.size() != cols_) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
  }

  /// Copy of the first `cols` columns.
  IntMatrix left_columns(std::size_t cols) const {
    IntMatrix out(rows_, cols);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(r, c);
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct EchelonForm {
  IntMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

/// Fraction-free (Bareiss) row echelon form. Every division is exact: each
/// entry after step r is an (r+1)-minor of the input.
inline EchelonForm bareiss_echelon(IntMatrix m) {
  EchelonForm out;
  BigInt previous = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pick = row;
    while (pick < m.rows() && m(pick, col) == 0) ++pick;
    if (pick == m.rows()) continue;
    if (pick != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pick, c), m(row, c));
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        BigInt v = m(row, col) * m(r, c) - m(r, col) * m(row, c);
        BigInt rem;
        divide_qr(v, previous, m(r, c), rem);
        if (rem != 0) throw Error(ErrorCode::InvalidArgument, "inexact Bareiss division");
      }
      m(r, col) = 0;
    }
    previous = m(row, col);
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const IntMatrix& m) { return bareiss_echelon(m).rank(); }

/// Basis of {x : m x = 0}, one primitive integer vector per free column.
inline std::vector<std::vector<BigInt>> nullspace(const IntMatrix& m) {
  const auto ech = bareiss_echelon(m);
  const auto& u = ech.reduced;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;

  std::vector<std::vector<BigInt>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(m.cols(), Rational(0));
    x[free] = 1;
    for (std::size_t i = ech.rank(); i-- > 0;) {
      const std::size_t p = ech.pivot_columns[i];
      Rational s(0);
      for (std::size_t j = p + 1; j < m.cols(); ++j) {
        if (x[j] != 0) s += Rational(u(i, j)) * x[j];
      }
      x[p] = -s / Rational(u(i, p));
    }
    BigInt scale = 1;
    for (const auto& v : x) scale = lcm(scale, boost::multiprecision::denominator(v));
    std::vector<BigInt> ints;
    BigInt g = 0;
    for (const auto& v : x) {
      ints.push_back(boost::multiprecision::numerator(v) * (scale / boost::multiprecision::denominator(v)));
      g = gcd(g, ints.back());
    }
    if (g > 1)
      for (auto& v : ints) v /= g;
    basis.push_back(std::move(ints));
  }
  return basis;
}

}  // namespace numoid

#endif  // NUMOID_LINALG_HPP
