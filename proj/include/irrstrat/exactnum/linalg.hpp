#pragma once

#include <Eigen/Core>

#include <vector>

#include "irrstrat/errors.hpp"
#include "irrstrat/exactnum/eigen_traits.hpp"

namespace irrstrat {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using GaussianMatrix = Matrix<GaussianRational>;
using GaussianVector = Vector<GaussianRational>;

inline bool scalar_is_zero(const Rational& s) { return s.is_zero(); }
inline bool scalar_is_zero(const GaussianRational& s) { return s.is_zero(); }

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!scalar_is_zero(m(i, j))) return false;
  return true;
}

template <class Derived>
bool is_diagonal(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (i != j && !scalar_is_zero(m(i, j))) return false;
  return true;
}

/// Equal shapes and entries.
template <class A, class B>
bool same_matrix(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

template <class M>
bool same_matrices(const std::vector<M>& a, const std::vector<M>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same_matrix(a[i], b[i])) return false;
  return true;
}

template <class Scalar>
struct RowEchelon {
  Matrix<Scalar> reduced;
  std::vector<Eigen::Index> pivot_columns;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
template <class Derived>
RowEchelon<typename Derived::Scalar> row_echelon(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && scalar_is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || scalar_is_zero(m(i, col))) continue;
      const Scalar factor = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Eigen::Index>(row_echelon(m).pivot_columns.size());
}

/// Basis of {v : m v = 0}, one basis vector per column of the result.
template <class Derived>
Matrix<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = row_echelon(m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto c : ech.pivot_columns) is_pivot[static_cast<std::size_t>(c)] = true;
  Matrix<Scalar> basis(n, n - static_cast<Eigen::Index>(ech.pivot_columns.size()));
  basis.setZero();
  Eigen::Index out = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, out) = Scalar(1);
    for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r) {
      basis(ech.pivot_columns[r], out) = -ech.reduced(static_cast<Eigen::Index>(r), free);
    }
    ++out;
  }
  return basis;
}

/// Exact inverse; throws NotInvertible for singular or non-square input.
template <class Derived>
Matrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw Error(ErrorCode::NotInvertible, "inverse of a non-square matrix");
  Matrix<Scalar> augmented(n, 2 * n);
  augmented.leftCols(n) = m;
  augmented.rightCols(n) = Matrix<Scalar>::Identity(n, n);
  const auto ech = row_echelon(augmented);
  if (static_cast<Eigen::Index>(ech.pivot_columns.size()) < n || (n > 0 && ech.pivot_columns[n - 1] >= n)) {
    throw Error(ErrorCode::NotInvertible, "matrix is singular");
  }
  return ech.reduced.rightCols(n);
}

/// Coefficients c_0..c_n of det(x I - m), so c_n = 1 (Faddeev-LeVerrier).
template <class Derived>
std::vector<typename Derived::Scalar> characteristic_polynomial(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  std::vector<Scalar> c(static_cast<std::size_t>(n + 1), Scalar(0));
  c[static_cast<std::size_t>(n)] = Scalar(1);
  Matrix<Scalar> acc = Matrix<Scalar>::Zero(n, n);
  const Matrix<Scalar> a = m;
  for (Eigen::Index k = 1; k <= n; ++k) {
    acc = a * acc;
    for (Eigen::Index i = 0; i < n; ++i) acc(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    const Matrix<Scalar> prod = a * acc;
    Scalar trace(0);
    for (Eigen::Index i = 0; i < n; ++i) trace += prod(i, i);
    c[static_cast<std::size_t>(n - k)] = -trace / Scalar(static_cast<long>(k));
  }
  return c;
}

/// Scales a nonzero rational vector to a primitive integer vector with the
/// same direction (first nonzero entry keeps its sign).
RationalVector primitive_integer_vector(const RationalVector& v);

}  // namespace irrstrat
