#include "irrstrat/symmetry.hpp"

#include <numeric>
#include <optional>
#include <string>

namespace irrstrat {

namespace {

template <PoleAt From, PoleAt To>
BasicIrregularType<To> swap_pole(const BasicIrregularType<From>& q) {
  return BasicIrregularType<To>(q.rootsystem(), q.p(), q.coefficients());
}

GaussianVector scaled(const GaussianVector& v, const GaussianRational& c) {
  GaussianVector out = v;
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) = c * out(i);
  return out;
}

int support_gcd(const std::vector<GaussianVector>& coefficients, int acc = 0) {
  for (std::size_t j = 0; j < coefficients.size(); ++j)
    if (!is_zero(coefficients[j])) acc = std::gcd(acc, static_cast<int>(j + 1));
  return acc;
}

}  // namespace

IrregularTypeAtInfinity convention_swap(const IrregularType& q) { return swap_pole<PoleAt::Zero, PoleAt::Infinity>(q); }
IrregularType convention_swap(const IrregularTypeAtInfinity& q) { return swap_pole<PoleAt::Infinity, PoleAt::Zero>(q); }

AffineG1::AffineG1(GaussianRational s_, GaussianRational r_) : s(std::move(s_)), r(std::move(r_)) {
  if (r.is_zero()) throw Error(ErrorCode::NotInvertible, "affine map with r = 0");
}

AffineG1 compose(const AffineG1& outer, const AffineG1& inner) {
  return {outer.r * inner.s + outer.s, outer.r * inner.r};
}

IrregularTypeAtInfinity g1_act(const AffineG1& g, const IrregularTypeAtInfinity& q) {
  const int p = q.p();
  const int rank = q.rootsystem().rank();
  std::vector<GaussianVector> out(static_cast<std::size_t>(p), GaussianVector::Zero(rank));
  // Row j of Pascal's triangle, times powers of r and s.
  for (int j = 1; j <= p; ++j) {
    const GaussianVector& a = q.coefficient(j);
    if (is_zero(a)) continue;
    mpz_class binom = 1;
    for (int m = 0; m <= j; ++m) {
      if (m >= 1) {
        const GaussianRational c = GaussianRational(Rational(binom)) * g.r.pow(m) * g.s.pow(j - m);
        if (!c.is_zero()) out[static_cast<std::size_t>(m - 1)] += scaled(a, c);
      }
      binom = binom * (j - m) / (m + 1);
    }
  }
  return IrregularTypeAtInfinity(q.rootsystem(), p, std::move(out));
}

G1Slice g1_slice(const IrregularTypeAtInfinity& q, RootIndex alpha) {
  const int d = root_order(q, alpha);
  if (d < 2) throw Error(ErrorCode::OrderTooLow, "slice needs root order at least 2");
  const RationalVector& root = q.rootsystem().root(alpha);
  const GaussianRational s = -pair(root, q.coefficient(d - 1)) / (GaussianRational(d) * pair(root, q.coefficient(d)));
  IrregularTypeAtInfinity sliced = g1_act(AffineG1(s, GaussianRational(1)), q);
  if (!pair(root, sliced.coefficient(d - 1)).is_zero())
    throw Error(ErrorCode::Unsupported, "slice translation failed to clear the subleading term");
  return {s, std::move(sliced)};
}

StabilizerOrder g1_stabilizer_order(const IrregularTypeAtInfinity& q) {
  const RootOrderVector d = root_order_vector(q);
  for (RootIndex a = 0; a < d.orders().size(); ++a) {
    if (d[a] < 2) continue;
    return StabilizerOrder::finite(support_gcd(g1_slice(q, a).sliced.coefficients()));
  }
  return StabilizerOrder::unbounded();
}

TorusG2::TorusG2(GaussianRational r_) : r(std::move(r_)) {
  if (r.is_zero()) throw Error(ErrorCode::NotInvertible, "torus element r = 0");
}

IrregularPair g2_act(const TorusG2& g, const IrregularPair& pair) {
  std::vector<GaussianVector> at0, atinf;
  for (int j = 1; j <= pair.at0.p(); ++j) at0.push_back(scaled(pair.at0.coefficient(j), g.r.pow(-j)));
  for (int j = 1; j <= pair.atinf.p(); ++j) atinf.push_back(scaled(pair.atinf.coefficient(j), g.r.pow(j)));
  return {IrregularType(pair.at0.rootsystem(), pair.at0.p(), std::move(at0)),
          IrregularTypeAtInfinity(pair.atinf.rootsystem(), pair.atinf.p(), std::move(atinf))};
}

int g2_stabilizer_order(const IrregularPair& pair) {
  const int g = support_gcd(pair.atinf.coefficients(), support_gcd(pair.at0.coefficients()));
  if (g == 0) throw Error(ErrorCode::ZeroPair, "both irregular types vanish");
  return g;
}

namespace {

/// c with b = c a, or nothing. Both vectors are nonzero.
std::optional<GaussianRational> proportionality(const GaussianVector& a, const GaussianVector& b) {
  Eigen::Index first = 0;
  while (a(first).is_zero()) ++first;
  const GaussianRational c = b(first) / a(first);
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!(b(i) == c * a(i))) return std::nullopt;
  return c;
}

}  // namespace

bool weighted_orbit_equivalent(const WeightedPoint& a, const WeightedPoint& b) {
  if (a.weights != b.weights || a.coefficients.size() != a.weights.size() ||
      b.coefficients.size() != b.weights.size())
    throw Error(ErrorCode::ShapeMismatch, "weighted points have different weight signatures");
  std::vector<int> weights;
  std::vector<GaussianRational> scalars;
  for (std::size_t j = 0; j < a.weights.size(); ++j) {
    if (a.coefficients[j].size() != b.coefficients[j].size())
      throw Error(ErrorCode::ShapeMismatch, "coefficient vectors differ in length");
    const bool za = is_zero(a.coefficients[j]), zb = is_zero(b.coefficients[j]);
    if (za != zb) return false;
    if (za) continue;
    const auto c = proportionality(a.coefficients[j], b.coefficients[j]);
    if (!c) return false;
    weights.push_back(a.weights[j]);
    scalars.push_back(*c);
  }
  int g = 0;
  for (int w : weights) g = std::gcd(g, w);
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j] == 0 && !(scalars[j] == GaussianRational(1))) return false;
    for (std::size_t k = j + 1; k < weights.size(); ++k) {
      if (g == 0) continue;
      if (!(scalars[j].pow(weights[k] / g) == scalars[k].pow(weights[j] / g))) return false;
    }
  }
  return true;
}

WeightedPoint weighted_point(const IrregularTypeAtInfinity& q) {
  WeightedPoint out;
  for (int j = 1; j <= q.p(); ++j) {
    out.weights.push_back(j);
    out.coefficients.push_back(q.coefficient(j));
  }
  return out;
}

WeightedPoint weighted_point(const IrregularPair& pair) {
  WeightedPoint out;
  for (int j = 1; j <= pair.at0.p(); ++j) {
    out.weights.push_back(-j);
    out.coefficients.push_back(pair.at0.coefficient(j));
  }
  for (int j = 1; j <= pair.atinf.p(); ++j) {
    out.weights.push_back(j);
    out.coefficients.push_back(pair.atinf.coefficient(j));
  }
  return out;
}

DmVerdict dm_check(int g, int m, const std::vector<RootOrderVector>& ds) {
  if (g < 0) throw Error(ErrorCode::OutOfRange, "negative genus");
  if (m < 1) throw Error(ErrorCode::OutOfRange, "at least one marked point is required");
  if (static_cast<int>(ds.size()) != m) throw Error(ErrorCode::DimensionMismatch, "need one root order vector per marked point");
  DmVerdict out;
  out.relevant = true;
  long total = 2L * g - 2 + m;
  for (const auto& d : ds) {
    const int p = d.max();
    total += p;
    // Relevance of a symmetric vector with span-closed level sets.
    bool relevant = d.is_symmetric();
    for (int i = 1; relevant && i <= p; ++i) {
      RootSet level;
      for (RootIndex a = 0; a < d.orders().size(); ++a)
        if (d[a] < i) level.push_back(a);
      relevant = is_span_closed(d.rootsystem(), level);
    }
    out.relevant = out.relevant && relevant;
  }
  out.deligne_mumford = total > 0;
  return out;
}

GaussianVector phi_n(const GaussianVector& b) {
  if (b.size() == 0) throw Error(ErrorCode::NotRegular, "empty vector");
  GaussianRational sum(0);
  for (Eigen::Index i = 0; i < b.size(); ++i) sum += b(i);
  if (!sum.is_zero()) throw Error(ErrorCode::NotRegular, "entries do not sum to zero");
  for (Eigen::Index i = 0; i < b.size(); ++i)
    for (Eigen::Index j = i + 1; j < b.size(); ++j)
      if (b(i) == b(j)) throw Error(ErrorCode::NotRegular, "repeated entry");
  GaussianVector x(b.size() - 1);
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = b(i + 1) - b(0);
  return x;
}

GaussianVector phi_n_inverse(const GaussianVector& x) {
  GaussianRational sum(0);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i).is_zero()) throw Error(ErrorCode::NotInXn, "zero entry");
    for (Eigen::Index j = i + 1; j < x.size(); ++j)
      if (x(i) == x(j)) throw Error(ErrorCode::NotInXn, "repeated entry");
    sum += x(i);
  }
  GaussianVector b(x.size() + 1);
  b(0) = -sum / GaussianRational(static_cast<long>(x.size() + 1));
  for (Eigen::Index i = 0; i < x.size(); ++i) b(i + 1) = b(0) + x(i);
  return b;
}

ExchangePoint exchange_map(const ExchangePoint& point) {
  return {phi_n(point.first), phi_n_inverse(point.second)};
}

ExchangePoint exchange_map_inverse(const ExchangePoint& point) {
  return {phi_n_inverse(point.first), phi_n(point.second)};
}

ExchangePoint scale(const ExchangePoint& point, const GaussianRational& c) {
  return {scaled(point.first, c), scaled(point.second, c)};
}

SL2ZElement::SL2ZElement(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_)
    : a(a_), b(b_), c(c_), d(d_) {
  const __int128 det = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
  if (det != 1) throw Error(ErrorCode::NotInSL2Z, "determinant is not 1");
}

SL2ZElement operator*(const SL2ZElement& x, const SL2ZElement& y) {
  auto entry = [](std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
    const __int128 v = static_cast<__int128>(p) * q + static_cast<__int128>(r) * s;
    if (v > INT64_MAX || v < INT64_MIN) throw Error(ErrorCode::OutOfRange, "SL2(Z) entry overflows 64 bits");
    return static_cast<std::int64_t>(v);
  };
  return {entry(x.a, y.a, x.b, y.c), entry(x.a, y.b, x.b, y.d), entry(x.c, y.a, x.d, y.c),
          entry(x.c, y.b, x.d, y.d)};
}

UpperHalfPoint::UpperHalfPoint(GaussianRational t) : tau(std::move(t)) {
  if (tau.im().sign() <= 0) throw Error(ErrorCode::NotInUpperHalfPlane, "Im tau must be positive");
}

SL2ZPoint sl2z_act(const SL2ZElement& gamma, const SL2ZPoint& point) {
  const GaussianRational& tau = point.tau.tau;
  auto lift = [](std::int64_t v) { return GaussianRational(Rational(mpz_class(std::to_string(v)))); };
  const GaussianRational j = lift(gamma.c) * tau + lift(gamma.d);
  const GaussianRational tau_prime = (lift(gamma.a) * tau + lift(gamma.b)) / j;
  const GaussianRational j_inv = j.inverse();
  std::vector<GaussianVector> out;
  GaussianRational factor(1);
  for (const auto& a : point.coefficients) {
    factor *= j_inv;
    out.push_back(scaled(a, factor));
  }
  return {UpperHalfPoint(tau_prime), std::move(out)};
}

}  // namespace irrstrat
