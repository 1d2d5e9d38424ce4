#pragma once

#include <algorithm>
#include <vector>

#include "irrstrat/errors.hpp"
#include "irrstrat/exactnum/gaussian.hpp"
#include "irrstrat/exactnum/linalg.hpp"

namespace irrstrat {

/// Element of Scalar[[z]]/(z^N). The truncation order N is part of the value;
/// binary operations on mixed orders return the smaller order.
template <class Scalar>
class TruncatedSeries {
 public:
  /// Zero series modulo z^order.
  explicit TruncatedSeries(int order) : coeffs_(checked_order(order), Scalar(0)) {}

  TruncatedSeries(int order, std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(checked_order(order), Scalar(0));
  }

  int order() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  const Scalar& operator[](int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return scalar_is_zero(c); });
  }
  bool is_unit() const { return !scalar_is_zero(coeffs_.front()); }

  /// Same value read modulo a smaller power of z.
  TruncatedSeries truncated(int order) const {
    if (order > this->order()) throw Error(ErrorCode::PrecisionExhausted, "cannot raise truncation order");
    return TruncatedSeries(order, std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + order));
  }

  TruncatedSeries operator-() const {
    TruncatedSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    for (int j = 0; j < n; ++j) out.coeffs_[j] = a.coeffs_[j] + b.coeffs_[j];
    return out;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    for (int i = 0; i < n; ++i) {
      if (scalar_is_zero(a.coeffs_[i])) continue;
      for (int j = 0; i + j < n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }
  friend TruncatedSeries operator*(const Scalar& s, TruncatedSeries a) {
    for (auto& c : a.coeffs_) c = s * c;
    return a;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  static std::size_t checked_order(int order) {
    if (order < 1) throw Error(ErrorCode::PrecisionExhausted, "truncation order must be at least 1");
    return static_cast<std::size_t>(order);
  }

  std::vector<Scalar> coeffs_;
};

/// Inverse modulo z^N; throws NotAUnit when the constant term vanishes.
template <class Scalar>
TruncatedSeries<Scalar> series_inverse(const TruncatedSeries<Scalar>& s) {
  if (!s.is_unit()) throw Error(ErrorCode::NotAUnit, "series with zero constant term is not invertible");
  const int n = s.order();
  std::vector<Scalar> inv(static_cast<std::size_t>(n), Scalar(0));
  const Scalar c0_inv = Scalar(1) / s[0];
  inv[0] = c0_inv;
  for (int k = 1; k < n; ++k) {
    Scalar acc(0);
    for (int j = 1; j <= k; ++j) acc += s[j] * inv[static_cast<std::size_t>(k - j)];
    inv[static_cast<std::size_t>(k)] = -acc * c0_inv;
  }
  return TruncatedSeries<Scalar>(n, std::move(inv));
}

/// d/dz; the result is known modulo z^(N-1). Throws PrecisionExhausted for N = 1.
template <class Scalar>
TruncatedSeries<Scalar> series_derivative(const TruncatedSeries<Scalar>& s) {
  if (s.order() == 1) throw Error(ErrorCode::PrecisionExhausted, "derivative of a series known only mod z");
  std::vector<Scalar> d;
  d.reserve(static_cast<std::size_t>(s.order() - 1));
  for (int j = 0; j + 1 < s.order(); ++j) d.push_back(Scalar(static_cast<long>(j + 1)) * s[j + 1]);
  return TruncatedSeries<Scalar>(s.order() - 1, std::move(d));
}

/// Element of z^{-k} O / O: the polar coefficients c_{-k}..c_{-1}.
template <class Scalar>
class LaurentTail {
 public:
  explicit LaurentTail(int pole_order_bound)
      : coeffs_(static_cast<std::size_t>(checked(pole_order_bound)), Scalar(0)) {}

  /// by_order[j - 1] is the coefficient of z^{-j}.
  LaurentTail(int pole_order_bound, std::vector<Scalar> by_order) : coeffs_(std::move(by_order)) {
    coeffs_.resize(static_cast<std::size_t>(checked(pole_order_bound)), Scalar(0));
  }

  int pole_order_bound() const { return static_cast<int>(coeffs_.size()); }

  /// Coefficient of z^{-j}, 1 <= j <= bound.
  const Scalar& coefficient(int j) const { return coeffs_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<Scalar>& by_order() const { return coeffs_; }

  /// Largest j with nonzero coefficient of z^{-j}, or 0.
  int pole_order() const {
    for (int j = pole_order_bound(); j >= 1; --j)
      if (!scalar_is_zero(coefficient(j))) return j;
    return 0;
  }
  bool is_zero() const { return pole_order() == 0; }

  /// Tails are compared as elements of K/O, so the declared bound is irrelevant.
  friend bool operator==(const LaurentTail& a, const LaurentTail& b) {
    const int n = std::max(a.pole_order_bound(), b.pole_order_bound());
    for (int j = 1; j <= n; ++j) {
      const bool az = j > a.pole_order_bound() || scalar_is_zero(a.coefficient(j));
      const bool bz = j > b.pole_order_bound() || scalar_is_zero(b.coefficient(j));
      if (az && bz) continue;
      if (az != bz || !(a.coefficient(j) == b.coefficient(j))) return false;
    }
    return true;
  }

 private:
  static int checked(int k) {
    if (k < 0) throw Error(ErrorCode::OutOfRange, "negative pole order bound");
    return k;
  }

  std::vector<Scalar> coeffs_;
};

using GaussianSeries = TruncatedSeries<GaussianRational>;
using GaussianTail = LaurentTail<GaussianRational>;

}  // namespace irrstrat
