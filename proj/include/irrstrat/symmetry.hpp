#pragma once

#include <cstdint>
#include <vector>

#include "irrstrat/irrtype.hpp"

namespace irrstrat {

/// Reindexes z^{-j} as w^{j} under w = 1/z; coefficients are kept.
IrregularTypeAtInfinity convention_swap(const IrregularType& q);
IrregularType convention_swap(const IrregularTypeAtInfinity& q);

/// The affine map z -> r z + s.
struct AffineG1 {
  GaussianRational s;
  GaussianRational r;

  /// Throws NotInvertible when r = 0.
  AffineG1(GaussianRational s, GaussianRational r);
  static AffineG1 identity() { return {GaussianRational(0), GaussianRational(1)}; }

  friend bool operator==(const AffineG1&, const AffineG1&) = default;
};

/// outer o inner, that is z -> outer(inner(z)).
AffineG1 compose(const AffineG1& outer, const AffineG1& inner);

/// Pullback Q(r z + s) with the constant term dropped:
/// A'_m = sum_{j >= m} C(j, m) r^m s^{j-m} A_j.
/// This is a right action: g1_act(h, g1_act(g, Q)) = g1_act(compose(g, h), Q).
IrregularTypeAtInfinity g1_act(const AffineG1& g, const IrregularTypeAtInfinity& q);

struct G1Slice {
  GaussianRational s;
  IrregularTypeAtInfinity sliced;
};

/// Translation putting Q on Z_alpha = {alpha(A_{d-1}) = 0}, d = d_alpha:
/// s = -alpha(A_{d-1}) / (d alpha(A_d)). Throws OrderTooLow when d < 2.
G1Slice g1_slice(const IrregularTypeAtInfinity& q, RootIndex alpha);

struct StabilizerOrder {
  bool infinite = false;
  int order = 0;

  static StabilizerOrder finite(int n) { return {false, n}; }
  static StabilizerOrder unbounded() { return {true, 0}; }
  friend bool operator==(const StabilizerOrder&, const StabilizerOrder&) = default;
};

/// Infinite when every root order is at most 1. Otherwise the order of the
/// cyclic stabilizer: gcd of {j : A'_j != 0} after slicing along the first
/// root of order >= 2.
StabilizerOrder g1_stabilizer_order(const IrregularTypeAtInfinity& q);

/// Scaling z -> r z of C^x acting on a pair of poles, at 0 and at infinity.
struct TorusG2 {
  GaussianRational r;

  /// Throws NotInvertible when r = 0.
  explicit TorusG2(GaussianRational r);
  friend bool operator==(const TorusG2&, const TorusG2&) = default;
};

struct IrregularPair {
  IrregularType at0;
  IrregularTypeAtInfinity atinf;

  friend bool operator==(const IrregularPair&, const IrregularPair&) = default;
};

/// A_{j,1} -> r^{-j} A_{j,1} at 0 and A_{j,2} -> r^{j} A_{j,2} at infinity.
IrregularPair g2_act(const TorusG2& g, const IrregularPair& pair);

/// gcd of the supports of both poles. Throws ZeroPair when both vanish.
int g2_stabilizer_order(const IrregularPair& pair);

/// Coefficient vectors A_j with weights w_j; r in C^x sends A_j to r^{w_j} A_j.
struct WeightedPoint {
  std::vector<int> weights;
  std::vector<GaussianVector> coefficients;
};

/// Whether some complex r has A'_j = r^{w_j} A_j for all j. Decided in Q(i):
/// supports agree, A'_j = c_j A_j, and with w'_j = w_j / gcd(w) the scalars
/// satisfy c_j^{w'_k} = c_k^{w'_j} on the support (c_j = 1 where w_j = 0).
/// Throws ShapeMismatch for different weights or vector lengths.
bool weighted_orbit_equivalent(const WeightedPoint& a, const WeightedPoint& b);

/// Weighted data of a type at infinity on a slice: weight j on A_j.
WeightedPoint weighted_point(const IrregularTypeAtInfinity& q);
/// Weights -j at 0 and +j at infinity.
WeightedPoint weighted_point(const IrregularPair& pair);

struct DmVerdict {
  bool relevant = false;
  bool deligne_mumford = false;
};

/// Relevance of every d_i (with p_i = max d_i) and 2g - 2 + m + sum max(d_i) > 0.
/// Throws OutOfRange for g < 0 or m < 1, DimensionMismatch unless |ds| = m.
DmVerdict dm_check(int g, int m, const std::vector<RootOrderVector>& ds);

/// b -> (b_2 - b_1, ..., b_{n+1} - b_1) for regular trace-zero b.
/// Throws NotRegular.
GaussianVector phi_n(const GaussianVector& b);

/// x -> b with b_1 = -(x_1 + ... + x_n)/(n+1), b_{i+1} = b_1 + x_i, for x
/// with nonzero pairwise distinct entries. Throws NotInXn.
GaussianVector phi_n_inverse(const GaussianVector& x);

struct ExchangePoint {
  GaussianVector first;
  GaussianVector second;

  friend bool operator==(const ExchangePoint& x, const ExchangePoint& y) {
    return same_matrix(x.first, y.first) && same_matrix(x.second, y.second);
  }
};

/// (b, x) in t_{n+1}^reg x X_m -> (phi_n(b), phi_m^{-1}(x)) in X_n x t_{m+1}^reg.
ExchangePoint exchange_map(const ExchangePoint& point);
/// (x', b') -> (phi_n^{-1}(x'), phi_m(b')).
ExchangePoint exchange_map_inverse(const ExchangePoint& point);
/// Both components multiplied by c.
ExchangePoint scale(const ExchangePoint& point, const GaussianRational& c);

struct SL2ZElement {
  std::int64_t a, b, c, d;

  /// Throws NotInSL2Z unless ad - bc = 1.
  SL2ZElement(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  static SL2ZElement identity() { return {1, 0, 0, 1}; }

  friend SL2ZElement operator*(const SL2ZElement& x, const SL2ZElement& y);
  friend bool operator==(const SL2ZElement&, const SL2ZElement&) = default;
};

struct UpperHalfPoint {
  GaussianRational tau;

  /// Throws NotInUpperHalfPlane unless Im tau > 0.
  explicit UpperHalfPoint(GaussianRational tau);
  friend bool operator==(const UpperHalfPoint&, const UpperHalfPoint&) = default;
};

struct SL2ZPoint {
  UpperHalfPoint tau;
  std::vector<GaussianVector> coefficients;  ///< A_1..A_p

  friend bool operator==(const SL2ZPoint& x, const SL2ZPoint& y) {
    return x.tau == y.tau && same_matrices(x.coefficients, y.coefficients);
  }
};

/// tau -> (a tau + b)/(c tau + d), A_j -> A_j / (c tau + d)^j. A left action.
SL2ZPoint sl2z_act(const SL2ZElement& gamma, const SL2ZPoint& point);

}  // namespace irrstrat
