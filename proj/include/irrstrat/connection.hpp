#pragma once

#include <utility>
#include <vector>

#include "irrstrat/exactnum/matrix_series.hpp"
#include "irrstrat/exactnum/series.hpp"
#include "irrstrat/irrtype.hpp"

namespace irrstrat {

/// One matrix entry f_ij(z) dz of a connection: polar part and holomorphic part.
struct ConnectionEntry {
  GaussianTail tail;
  GaussianSeries regular;
};

/// Germ of a gl_r connection d - M, M = sum_e C_e z^e dz, with pole order at
/// most k+1, known exactly from z^{-(k+1)} up to z^{N-1}.
class ConnectionGerm {
 public:
  /// Every tail must have bound k+1 and every regular part order N.
  ConnectionGerm(int r, int pole_bound, int precision, const std::vector<std::vector<ConnectionEntry>>& entries);
  /// Reads a matrix series with low >= -(k+1) and high >= 1.
  ConnectionGerm(int pole_bound, const LaurentMatrixSeries<GaussianRational>& series);

  /// Differential of a diagonal irregular type: dQ, with zero holomorphic part.
  static ConnectionGerm differential(const IrregularType& q, int precision);

  int r() const { return static_cast<int>(series_.size()); }
  int pole_bound() const { return k_; }
  int precision() const { return series_.high(); }
  ConnectionEntry entry(int i, int j) const;
  /// Coefficient matrix of z^e dz.
  GaussianMatrix coefficient(int e) const { return series_.at(e); }
  const LaurentMatrixSeries<GaussianRational>& series() const { return series_; }

  friend bool operator==(const ConnectionGerm& a, const ConnectionGerm& b) {
    return a.k_ == b.k_ && a.series_ == b.series_;
  }

 private:
  int k_;
  LaurentMatrixSeries<GaussianRational> series_;
};

/// Element of GL_r(C[[z]]) known modulo z^N.
class GaugeElement {
 public:
  /// Throws NotInvertible unless the constant term is invertible.
  GaugeElement(int r, int precision, const std::vector<std::vector<GaussianSeries>>& entries);
  explicit GaugeElement(LaurentMatrixSeries<GaussianRational> series);

  static GaugeElement identity(int r, int precision);
  /// A constant matrix, exact to any precision.
  static GaugeElement constant(const GaussianMatrix& m, int precision);

  int r() const { return static_cast<int>(series_.size()); }
  int precision() const { return series_.high(); }
  GaussianSeries entry(int i, int j) const;
  const LaurentMatrixSeries<GaussianRational>& series() const { return series_; }

  /// Composition h g as a gauge; the precision is the smaller one.
  friend GaugeElement operator*(const GaugeElement& h, const GaugeElement& g) {
    return GaugeElement(h.series_ * g.series_);
  }
  friend bool operator==(const GaugeElement& a, const GaugeElement& b) { return a.series_ == b.series_; }

 private:
  LaurentMatrixSeries<GaussianRational> series_;
};

/// g M g^{-1} + dg g^{-1}. The result keeps the pole bound k and is known
/// modulo z^{N'} with N' = min(N_M, N_g - k - 1); throws PrecisionExhausted
/// when N' < 1.
ConnectionGerm gauge_transform(const ConnectionGerm& m, const GaugeElement& g);

/// Off-diagonal coefficients of z^{-j} dz vanish for every j >= 2.
bool is_untwisted_in_basis(const ConnectionGerm& m);

/// Irregular type for the diagonal Cartan of gl_r, A_l = -C_{-(l+1)}/l on
/// the diagonal, l = 1..k. Throws Twisted when the basis is not untwisted.
IrregularType extract_irregular_type(const ConnectionGerm& m);

struct Diagonalization {
  GaugeElement gauge;
  ConnectionGerm result;
};

/// Gauge making every coefficient below z^{-1} dz diagonal, when the leading
/// matrix C_{-(k+1)} has r distinct eigenvalues in Q(i). Eigenvectors are
/// scaled to have first nonzero entry 1 and ordered by the position of that
/// entry, then by eigenvalue (re, im); a diagonal leading matrix therefore
/// keeps its order. The gauge has precision N + k + 1, so the result keeps
/// precision N. Throws OutOfRange for k = 0,
/// LeadingNotRegular, NotSplitOverField.
Diagonalization leading_regular_diagonalize(const ConnectionGerm& m);

/// Whether M and gauge_transform(M, g) have the same irregular type.
/// Throws NotIdentityModZ unless g(0) = Id.
bool verify_framing_invariance(const ConnectionGerm& m, const GaugeElement& g);

}  // namespace irrstrat
