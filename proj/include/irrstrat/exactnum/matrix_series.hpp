#pragma once

#include <algorithm>
#include <vector>

#include "irrstrat/errors.hpp"
#include "irrstrat/exactnum/linalg.hpp"

namespace irrstrat {

/// sum_{e = low}^{high - 1} C_e z^e, an r x r Laurent matrix known modulo z^high.
template <class Scalar>
class LaurentMatrixSeries {
 public:
  LaurentMatrixSeries(Eigen::Index r, int low, int high) : r_(r), low_(low) {
    if (high <= low) throw Error(ErrorCode::PrecisionExhausted, "empty range of known coefficients");
    coeffs_.assign(static_cast<std::size_t>(high - low), Matrix<Scalar>::Zero(r, r));
  }

  static LaurentMatrixSeries identity(Eigen::Index r, int high) {
    LaurentMatrixSeries out(r, 0, high);
    out.coeffs_[0] = Matrix<Scalar>::Identity(r, r);
    return out;
  }

  Eigen::Index size() const { return r_; }
  int low() const { return low_; }
  /// Exclusive: coefficients from z^high on are unknown.
  int high() const { return low_ + static_cast<int>(coeffs_.size()); }

  /// Coefficient of z^e; zero below low. Throws PrecisionExhausted at or above high.
  Matrix<Scalar> at(int e) const {
    if (e >= high()) throw Error(ErrorCode::PrecisionExhausted, "coefficient beyond the known precision");
    if (e < low_) return Matrix<Scalar>::Zero(r_, r_);
    return coeffs_[static_cast<std::size_t>(e - low_)];
  }
  Matrix<Scalar>& coefficient(int e) {
    if (e < low_ || e >= high()) throw Error(ErrorCode::IndexOutOfRange, "exponent outside the stored range");
    return coeffs_[static_cast<std::size_t>(e - low_)];
  }

  LaurentMatrixSeries truncated(int high) const {
    if (high > this->high()) throw Error(ErrorCode::PrecisionExhausted, "cannot raise truncation order");
    LaurentMatrixSeries out(r_, low_, high);
    std::copy(coeffs_.begin(), coeffs_.begin() + (high - low_), out.coeffs_.begin());
    return out;
  }

  friend LaurentMatrixSeries operator+(const LaurentMatrixSeries& a, const LaurentMatrixSeries& b) {
    LaurentMatrixSeries out(a.r_, std::min(a.low_, b.low_), std::min(a.high(), b.high()));
    for (int e = out.low_; e < out.high(); ++e) out.coefficient(e) = a.at(e) + b.at(e);
    return out;
  }

  friend LaurentMatrixSeries operator*(const LaurentMatrixSeries& a, const LaurentMatrixSeries& b) {
    const int low = a.low_ + b.low_;
    const int high = std::min(a.high() + b.low_, b.high() + a.low_);
    LaurentMatrixSeries out(a.r_, low, high);
    for (int i = a.low_; i < a.high(); ++i) {
      const auto& ai = a.coeffs_[static_cast<std::size_t>(i - a.low_)];
      if (is_zero(ai)) continue;
      for (int j = b.low_; i + j < high; ++j) out.coefficient(i + j) += ai * b.coeffs_[static_cast<std::size_t>(j - b.low_)];
    }
    return out;
  }

  friend bool operator==(const LaurentMatrixSeries& a, const LaurentMatrixSeries& b) {
    if (a.r_ != b.r_ || a.high() != b.high()) return false;
    for (int e = std::min(a.low_, b.low_); e < a.high(); ++e)
      if (a.at(e) != b.at(e)) return false;
    return true;
  }

 private:
  Eigen::Index r_;
  int low_;
  std::vector<Matrix<Scalar>> coeffs_;
};

/// d/dz of a holomorphic matrix series, known to one order less.
template <class Scalar>
LaurentMatrixSeries<Scalar> matrix_series_derivative(const LaurentMatrixSeries<Scalar>& g) {
  if (g.low() < 0) throw Error(ErrorCode::Unsupported, "derivative of a polar matrix series");
  LaurentMatrixSeries<Scalar> out(g.size(), 0, g.high() - 1);
  for (int e = 1; e < g.high(); ++e) out.coefficient(e - 1) = g.at(e) * Scalar(static_cast<long>(e));
  return out;
}

/// Inverse of a holomorphic matrix series with invertible constant term.
template <class Scalar>
LaurentMatrixSeries<Scalar> matrix_series_inverse(const LaurentMatrixSeries<Scalar>& g) {
  if (g.low() < 0) throw Error(ErrorCode::Unsupported, "inverse of a polar matrix series");
  const Matrix<Scalar> c0_inv = inverse(g.at(0));
  LaurentMatrixSeries<Scalar> out(g.size(), 0, g.high());
  out.coefficient(0) = c0_inv;
  for (int n = 1; n < g.high(); ++n) {
    Matrix<Scalar> acc = Matrix<Scalar>::Zero(g.size(), g.size());
    for (int j = 1; j <= n; ++j) acc += g.at(j) * out.at(n - j);
    out.coefficient(n) = -(c0_inv * acc);
  }
  return out;
}

}  // namespace irrstrat
