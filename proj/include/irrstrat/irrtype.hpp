#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "irrstrat/exactnum/polynomial.hpp"
#include "irrstrat/exactnum/series.hpp"
#include "irrstrat/rootsys.hpp"

namespace irrstrat {

/// Where the pole sits. At zero, A_j multiplies z^{-j}; at infinity, z^{+j}.
enum class PoleAt { Zero, Infinity };

/// Cartan-valued polar part sum_j A_j z^{-j} (or z^{+j} at infinity),
/// j = 1..p, with A_j in Q(i)^r.
template <PoleAt Where>
class BasicIrregularType {
 public:
  /// Throws DimensionMismatch unless there are p coefficients of length r.
  BasicIrregularType(RootSystem rootsystem, int p, std::vector<GaussianVector> coefficients)
      : rootsystem_(std::move(rootsystem)), p_(p), coefficients_(std::move(coefficients)) {
    if (p_ < 0) throw Error(ErrorCode::OutOfRange, "negative pole order");
    if (static_cast<int>(coefficients_.size()) != p_)
      throw Error(ErrorCode::DimensionMismatch, "expected one coefficient vector per pole order");
    for (const auto& a : coefficients_)
      if (a.size() != rootsystem_.rank())
        throw Error(ErrorCode::DimensionMismatch, "coefficient vector length differs from rank");
  }

  static BasicIrregularType zero(RootSystem rootsystem, int p) {
    const int r = rootsystem.rank();
    return BasicIrregularType(std::move(rootsystem), p,
                              std::vector<GaussianVector>(static_cast<std::size_t>(std::max(p, 0)),
                                                          GaussianVector::Zero(r)));
  }

  const RootSystem& rootsystem() const { return rootsystem_; }
  int p() const { return p_; }
  /// A_j for 1 <= j <= p.
  const GaussianVector& coefficient(int j) const { return coefficients_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<GaussianVector>& coefficients() const { return coefficients_; }

  bool is_zero() const {
    for (const auto& a : coefficients_)
      if (!irrstrat::is_zero(a)) return false;
    return true;
  }

  friend bool operator==(const BasicIrregularType& a, const BasicIrregularType& b) {
    return a.rootsystem_ == b.rootsystem_ && a.p_ == b.p_ && same_matrices(a.coefficients_, b.coefficients_);
  }

 private:
  RootSystem rootsystem_;
  int p_;
  std::vector<GaussianVector> coefficients_;
};

using IrregularType = BasicIrregularType<PoleAt::Zero>;
using IrregularTypeAtInfinity = BasicIrregularType<PoleAt::Infinity>;

/// alpha(v) = sum_i alpha_i v_i.
GaussianRational pair(const RationalVector& alpha, const GaussianVector& v);

/// Map alpha -> d_alpha, indexed like the roots of the root system.
class RootOrderVector {
 public:
  RootOrderVector(RootSystem rootsystem, std::vector<int> orders);

  const RootSystem& rootsystem() const { return rootsystem_; }
  const std::vector<int>& orders() const { return orders_; }
  int operator[](RootIndex i) const { return orders_.at(i); }
  /// 0 for a root system without roots.
  int max() const;
  bool is_symmetric() const;

  friend bool operator==(const RootOrderVector& a, const RootOrderVector& b) {
    return a.rootsystem_ == b.rootsystem_ && a.orders_ == b.orders_;
  }

 private:
  RootSystem rootsystem_;
  std::vector<int> orders_;
};

/// Exponential factor alpha o Q as a tail with coefficients alpha(A_j).
template <PoleAt Where>
GaussianTail evaluate_root(const BasicIrregularType<Where>& q, RootIndex alpha) {
  std::vector<GaussianRational> c;
  c.reserve(static_cast<std::size_t>(q.p()));
  for (int j = 1; j <= q.p(); ++j) c.push_back(pair(q.rootsystem().root(alpha), q.coefficient(j)));
  return GaussianTail(q.p(), std::move(c));
}

/// max{j : alpha(A_j) != 0}, or 0.
template <PoleAt Where>
int root_order(const BasicIrregularType<Where>& q, RootIndex alpha) {
  const RationalVector& root = q.rootsystem().root(alpha);
  for (int j = q.p(); j >= 1; --j)
    if (!pair(root, q.coefficient(j)).is_zero()) return j;
  return 0;
}

template <PoleAt Where>
RootOrderVector root_order_vector(const BasicIrregularType<Where>& q) {
  std::vector<int> d(q.rootsystem().size());
  for (RootIndex a = 0; a < d.size(); ++a) d[a] = root_order(q, a);
  return RootOrderVector(q.rootsystem(), std::move(d));
}

/// Phi_i = {alpha : alpha(A_j) = 0 for i <= j <= p}, i = 1..p.
LeviFiltration levi_filtration_of(const IrregularType& q);

/// Irregular type with polynomial coefficients over the affine base C^n
/// with coordinates `variables`.
class FamilyIrregularType {
 public:
  /// coefficients[j-1][k] is the k-th coordinate of A_j. Variable-free
  /// constants are lifted onto `variables`; other mismatches throw
  /// VariableMismatch.
  FamilyIrregularType(RootSystem rootsystem, int p, std::vector<std::string> variables,
                      std::vector<std::vector<MultiPoly>> coefficients);

  const RootSystem& rootsystem() const { return rootsystem_; }
  int p() const { return p_; }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<MultiPoly>& coefficient(int j) const { return coefficients_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<std::vector<MultiPoly>>& coefficients() const { return coefficients_; }

  /// The fibre over a base point.
  IrregularType specialize(std::span<const GaussianRational> point) const;
  /// Pulls the family back along x_i -> images[i].
  FamilyIrregularType change_variables(std::span<const MultiPoly> images) const;

 private:
  RootSystem rootsystem_;
  int p_;
  std::vector<std::string> variables_;
  std::vector<std::vector<MultiPoly>> coefficients_;
};

/// alpha applied to a vector of polynomials.
MultiPoly pair(const RationalVector& alpha, const std::vector<MultiPoly>& v);

struct FamilyRootOrder {
  int order = 0;
  /// True when the order is the same over every point of the base.
  bool constant_order = true;
};

FamilyRootOrder family_root_order(const FamilyIrregularType& f, RootIndex alpha);

struct AdmissibilityFailure {
  RootIndex root;
  /// alpha(A_{d_alpha}); the order drops exactly on its zero locus.
  MultiPoly witness;
};

struct AdmissibilityReport {
  bool admissible = true;
  std::vector<AdmissibilityFailure> failures;
  /// Generic root orders over the base.
  std::vector<int> orders;
};

AdmissibilityReport is_admissible(const FamilyIrregularType& f);

}  // namespace irrstrat
