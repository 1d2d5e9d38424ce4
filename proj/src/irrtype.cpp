#include "irrstrat/irrtype.hpp"

#include <algorithm>

namespace irrstrat {

GaussianRational pair(const RationalVector& alpha, const GaussianVector& v) {
  if (alpha.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "root and vector differ in length");
  GaussianRational sum(0);
  for (Eigen::Index i = 0; i < alpha.size(); ++i)
    if (!alpha(i).is_zero()) sum += GaussianRational(alpha(i)) * v(i);
  return sum;
}

RootOrderVector::RootOrderVector(RootSystem rootsystem, std::vector<int> orders)
    : rootsystem_(std::move(rootsystem)), orders_(std::move(orders)) {
  if (orders_.size() != rootsystem_.size())
    throw Error(ErrorCode::DimensionMismatch, "root order vector needs one entry per root");
  if (std::any_of(orders_.begin(), orders_.end(), [](int d) { return d < 0; }))
    throw Error(ErrorCode::OutOfRange, "negative root order");
}

int RootOrderVector::max() const {
  return orders_.empty() ? 0 : *std::max_element(orders_.begin(), orders_.end());
}

bool RootOrderVector::is_symmetric() const {
  for (RootIndex a = 0; a < orders_.size(); ++a)
    if (orders_[a] != orders_[rootsystem_.negation(a)]) return false;
  return true;
}

LeviFiltration levi_filtration_of(const IrregularType& q) {
  const RootOrderVector d = root_order_vector(q);
  std::vector<LeviSubsystem> levels;
  for (int i = 1; i <= q.p(); ++i) {
    RootSet level;
    for (RootIndex a = 0; a < d.orders().size(); ++a)
      if (d[a] < i) level.push_back(a);
    levels.emplace_back(q.rootsystem(), std::move(level));
  }
  return LeviFiltration(q.rootsystem(), std::move(levels));
}

FamilyIrregularType::FamilyIrregularType(RootSystem rootsystem, int p, std::vector<std::string> variables,
                                         std::vector<std::vector<MultiPoly>> coefficients)
    : rootsystem_(std::move(rootsystem)), p_(p), variables_(std::move(variables)),
      coefficients_(std::move(coefficients)) {
  if (p_ < 0) throw Error(ErrorCode::OutOfRange, "negative pole order");
  if (static_cast<int>(coefficients_.size()) != p_)
    throw Error(ErrorCode::DimensionMismatch, "expected one coefficient vector per pole order");
  const MultiPoly zero(variables_);
  for (auto& a : coefficients_) {
    if (static_cast<int>(a.size()) != rootsystem_.rank())
      throw Error(ErrorCode::DimensionMismatch, "coefficient vector length differs from rank");
    for (auto& entry : a) {
      if (entry.variables() == variables_) continue;
      if (entry.variables().empty()) {
        entry = zero + entry;
        continue;
      }
      throw Error(ErrorCode::VariableMismatch, "coefficient uses undeclared variables");
    }
  }
}

IrregularType FamilyIrregularType::specialize(std::span<const GaussianRational> point) const {
  std::vector<GaussianVector> values;
  for (const auto& a : coefficients_) {
    GaussianVector v(rootsystem_.rank());
    for (std::size_t k = 0; k < a.size(); ++k) v(static_cast<Eigen::Index>(k)) = a[k].evaluate(point);
    values.push_back(std::move(v));
  }
  return IrregularType(rootsystem_, p_, std::move(values));
}

FamilyIrregularType FamilyIrregularType::change_variables(std::span<const MultiPoly> images) const {
  std::vector<std::string> target = images.empty() ? variables_ : images.front().variables();
  std::vector<std::vector<MultiPoly>> pulled;
  for (const auto& a : coefficients_) {
    std::vector<MultiPoly> row;
    for (const auto& entry : a) row.push_back(entry.substitute(images));
    pulled.push_back(std::move(row));
  }
  return FamilyIrregularType(rootsystem_, p_, std::move(target), std::move(pulled));
}

MultiPoly pair(const RationalVector& alpha, const std::vector<MultiPoly>& v) {
  if (static_cast<std::size_t>(alpha.size()) != v.size())
    throw Error(ErrorCode::DimensionMismatch, "root and vector differ in length");
  MultiPoly sum = v.empty() ? MultiPoly() : MultiPoly(v.front().variables());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational& c = alpha(static_cast<Eigen::Index>(i));
    if (!c.is_zero()) sum += MultiPoly::constant(v[i].variables(), GaussianRational(c)) * v[i];
  }
  return sum;
}

FamilyRootOrder family_root_order(const FamilyIrregularType& f, RootIndex alpha) {
  const RationalVector& root = f.rootsystem().root(alpha);
  for (int j = f.p(); j >= 1; --j) {
    const MultiPoly value = pair(root, f.coefficient(j));
    // A polynomial without zeros on all of C^n is a nonzero constant.
    if (!value.is_zero()) return {j, value.is_constant()};
  }
  return {0, true};
}

AdmissibilityReport is_admissible(const FamilyIrregularType& f) {
  AdmissibilityReport report;
  for (RootIndex a = 0; a < f.rootsystem().size(); ++a) {
    const FamilyRootOrder o = family_root_order(f, a);
    report.orders.push_back(o.order);
    if (o.constant_order) continue;
    report.admissible = false;
    report.failures.push_back({a, pair(f.rootsystem().root(a), f.coefficient(o.order))});
  }
  return report;
}

}  // namespace irrstrat
