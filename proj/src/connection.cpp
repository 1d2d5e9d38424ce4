#include "irrstrat/connection.hpp"

#include <algorithm>
#include <numeric>

#include "irrstrat/exactnum/gaussian_roots.hpp"

namespace irrstrat {

using GaussianMatrixSeries = LaurentMatrixSeries<GaussianRational>;

ConnectionGerm::ConnectionGerm(int r, int pole_bound, int precision,
                               const std::vector<std::vector<ConnectionEntry>>& entries)
    : k_(pole_bound), series_(std::max(r, 0), -(pole_bound + 1), std::max(precision, 1)) {
  if (r < 1) throw Error(ErrorCode::OutOfRange, "connection rank must be positive");
  if (pole_bound < 0) throw Error(ErrorCode::OutOfRange, "negative pole bound");
  if (precision < 1) throw Error(ErrorCode::PrecisionExhausted, "connection precision must be positive");
  if (static_cast<int>(entries.size()) != r) throw Error(ErrorCode::DimensionMismatch, "entries must form an r x r matrix");
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(entries[i].size()) != r)
      throw Error(ErrorCode::DimensionMismatch, "entries must form an r x r matrix");
    for (int j = 0; j < r; ++j) {
      const auto& e = entries[i][j];
      if (e.tail.pole_order_bound() != k_ + 1)
        throw Error(ErrorCode::DimensionMismatch, "tail bound differs from pole_bound + 1");
      if (e.regular.order() != precision)
        throw Error(ErrorCode::DimensionMismatch, "regular part precision differs from the declared one");
      for (int l = 1; l <= k_ + 1; ++l) series_.coefficient(-l)(i, j) = e.tail.coefficient(l);
      for (int l = 0; l < precision; ++l) series_.coefficient(l)(i, j) = e.regular[l];
    }
  }
}

ConnectionGerm::ConnectionGerm(int pole_bound, const GaussianMatrixSeries& series)
    : k_(pole_bound), series_(series.size(), -(pole_bound + 1), series.high()) {
  if (pole_bound < 0) throw Error(ErrorCode::OutOfRange, "negative pole bound");
  if (series.high() < 1) throw Error(ErrorCode::PrecisionExhausted, "connection precision must be positive");
  if (series.low() < -(pole_bound + 1)) {
    for (int e = series.low(); e < -(pole_bound + 1); ++e)
      if (!is_zero(series.at(e))) throw Error(ErrorCode::OutOfRange, "pole order exceeds the bound");
  }
  for (int e = -(pole_bound + 1); e < series.high(); ++e) series_.coefficient(e) = series.at(e);
}

ConnectionGerm ConnectionGerm::differential(const IrregularType& q, int precision) {
  const int r = q.rootsystem().rank();
  GaussianMatrixSeries s(r, -(q.p() + 1), precision);
  for (int l = 1; l <= q.p(); ++l)
    for (int i = 0; i < r; ++i) s.coefficient(-(l + 1))(i, i) = -GaussianRational(l) * q.coefficient(l)(i);
  return ConnectionGerm(q.p(), s);
}

ConnectionEntry ConnectionGerm::entry(int i, int j) const {
  std::vector<GaussianRational> tail, regular;
  for (int l = 1; l <= k_ + 1; ++l) tail.push_back(series_.at(-l)(i, j));
  for (int l = 0; l < precision(); ++l) regular.push_back(series_.at(l)(i, j));
  return {GaussianTail(k_ + 1, std::move(tail)), GaussianSeries(precision(), std::move(regular))};
}

GaugeElement::GaugeElement(int r, int precision, const std::vector<std::vector<GaussianSeries>>& entries)
    : series_(std::max(r, 0), 0, std::max(precision, 1)) {
  if (r < 1) throw Error(ErrorCode::OutOfRange, "gauge rank must be positive");
  if (precision < 1) throw Error(ErrorCode::PrecisionExhausted, "gauge precision must be positive");
  if (static_cast<int>(entries.size()) != r) throw Error(ErrorCode::DimensionMismatch, "entries must form an r x r matrix");
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(entries[i].size()) != r)
      throw Error(ErrorCode::DimensionMismatch, "entries must form an r x r matrix");
    for (int j = 0; j < r; ++j) {
      if (entries[i][j].order() != precision)
        throw Error(ErrorCode::DimensionMismatch, "entry precision differs from the declared one");
      for (int l = 0; l < precision; ++l) series_.coefficient(l)(i, j) = entries[i][j][l];
    }
  }
  inverse(series_.at(0));
}

GaugeElement::GaugeElement(GaussianMatrixSeries series) : series_(std::move(series)) {
  if (series_.low() < 0) {
    for (int e = series_.low(); e < 0; ++e)
      if (!is_zero(series_.at(e))) throw Error(ErrorCode::OutOfRange, "gauge element has a pole");
    GaussianMatrixSeries holo(series_.size(), 0, series_.high());
    for (int e = 0; e < series_.high(); ++e) holo.coefficient(e) = series_.at(e);
    series_ = std::move(holo);
  }
  inverse(series_.at(0));
}

GaugeElement GaugeElement::identity(int r, int precision) {
  return GaugeElement(GaussianMatrixSeries::identity(r, precision));
}

GaugeElement GaugeElement::constant(const GaussianMatrix& m, int precision) {
  GaussianMatrixSeries s(m.rows(), 0, precision);
  s.coefficient(0) = m;
  return GaugeElement(std::move(s));
}

GaussianSeries GaugeElement::entry(int i, int j) const {
  std::vector<GaussianRational> c;
  for (int l = 0; l < precision(); ++l) c.push_back(series_.at(l)(i, j));
  return GaussianSeries(precision(), std::move(c));
}

ConnectionGerm gauge_transform(const ConnectionGerm& m, const GaugeElement& g) {
  if (m.r() != g.r()) throw Error(ErrorCode::DimensionMismatch, "connection and gauge differ in rank");
  const int k = m.pole_bound();
  const int out_precision = std::min(m.precision(), g.precision() - k - 1);
  if (out_precision < 1)
    throw Error(ErrorCode::PrecisionExhausted, "gauge precision too low for the pole order of the connection");
  const GaussianMatrixSeries& gs = g.series();
  const GaussianMatrixSeries g_inv = matrix_series_inverse(gs);
  GaussianMatrixSeries result = gs * m.series() * g_inv;
  if (gs.high() > 1) result = result + matrix_series_derivative(gs) * g_inv;
  return ConnectionGerm(k, result.truncated(out_precision));
}

bool is_untwisted_in_basis(const ConnectionGerm& m) {
  for (int l = 2; l <= m.pole_bound() + 1; ++l)
    if (!is_diagonal(m.coefficient(-l))) return false;
  return true;
}

IrregularType extract_irregular_type(const ConnectionGerm& m) {
  if (!is_untwisted_in_basis(m)) throw Error(ErrorCode::Twisted, "polar part below order -1 is not diagonal");
  const int r = m.r();
  std::vector<GaussianVector> a;
  for (int l = 1; l <= m.pole_bound(); ++l) {
    const GaussianMatrix c = m.coefficient(-(l + 1));
    GaussianVector v(r);
    for (int i = 0; i < r; ++i) v(i) = -c(i, i) / GaussianRational(l);
    a.push_back(std::move(v));
  }
  return IrregularType(general_linear_roots(r), m.pole_bound(), std::move(a));
}

namespace {

GaussianVector eigenvector(const GaussianMatrix& l, const GaussianRational& lambda) {
  const Eigen::Index r = l.rows();
  const GaussianMatrix shifted = l - GaussianMatrix::Identity(r, r) * lambda;
  const GaussianMatrix kernel = nullspace(shifted);
  GaussianVector v = kernel.col(0);
  Eigen::Index first = 0;
  while (v(first).is_zero()) ++first;
  const GaussianRational scale = v(first).inverse();
  for (Eigen::Index i = 0; i < r; ++i) v(i) *= scale;
  return v;
}

}  // namespace

Diagonalization leading_regular_diagonalize(const ConnectionGerm& m) {
  const int k = m.pole_bound();
  const int r = m.r();
  if (k < 1) throw Error(ErrorCode::OutOfRange, "diagonalization needs pole order at least 2");
  const GaussianMatrix leading = m.coefficient(-(k + 1));
  const UnivariatePoly chi = characteristic_polynomial(leading);
  if (!is_squarefree(chi)) throw Error(ErrorCode::LeadingNotRegular, "leading matrix has a repeated eigenvalue");
  std::vector<GaussianRational> eigenvalues = roots_in_gaussian_rationals(chi);
  if (static_cast<int>(eigenvalues.size()) != r)
    throw Error(ErrorCode::NotSplitOverField, "leading eigenvalues do not all lie in Q(i)");
  struct EigenPair {
    GaussianRational value;
    GaussianVector vector;
    Eigen::Index lead;
  };
  std::vector<EigenPair> pairs;
  for (const auto& lambda : eigenvalues) {
    GaussianVector v = eigenvector(leading, lambda);
    Eigen::Index lead = 0;
    while (v(lead).is_zero()) ++lead;
    pairs.push_back({lambda, std::move(v), lead});
  }
  std::sort(pairs.begin(), pairs.end(), [](const EigenPair& x, const EigenPair& y) {
    return x.lead != y.lead ? x.lead < y.lead : lex_less(x.value, y.value);
  });
  GaussianMatrix basis(r, r);
  for (int a = 0; a < r; ++a) {
    basis.col(a) = pairs[static_cast<std::size_t>(a)].vector;
    eigenvalues[static_cast<std::size_t>(a)] = pairs[static_cast<std::size_t>(a)].value;
  }

  const int work_precision = m.precision() + k + 1;
  GaugeElement total = GaugeElement::constant(inverse(basis), work_precision);
  ConnectionGerm current = gauge_transform(m, total);
  for (int j = 1; j <= k - 1; ++j) {
    const GaussianMatrix n = current.coefficient(-(k + 1) + j);
    GaussianMatrixSeries step = GaussianMatrixSeries::identity(r, work_precision);
    bool trivial = true;
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) {
        if (a == b || n(a, b).is_zero()) continue;
        const std::size_t ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
        step.coefficient(j)(a, b) = n(a, b) / (eigenvalues[ua] - eigenvalues[ub]);
        trivial = false;
      }
    if (trivial) continue;
    const GaugeElement g(std::move(step));
    current = gauge_transform(current, g);
    total = g * total;
  }
  ConnectionGerm result = gauge_transform(m, total);
  return {std::move(total), std::move(result)};
}

bool verify_framing_invariance(const ConnectionGerm& m, const GaugeElement& g) {
  const int r = g.r();
  if (g.series().at(0) != GaussianMatrix::Identity(r, r))
    throw Error(ErrorCode::NotIdentityModZ, "gauge is not the identity modulo z");
  return extract_irregular_type(m) == extract_irregular_type(gauge_transform(m, g));
}

}  // namespace irrstrat
