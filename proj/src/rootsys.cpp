#include "irrstrat/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "irrstrat/errors.hpp"

namespace irrstrat {

namespace {

RationalVector unit(int dim, int i) {
  RationalVector v = RationalVector::Zero(dim);
  v(i) = Rational(1);
  return v;
}

struct Positive {
  RationalVector root;
  int height;
};

std::vector<Positive> classical_positive_roots(char family, int n) {
  std::vector<Positive> out;
  const int dim = family == 'A' ? n + 1 : n;
  // 0-based indices: e_i - e_j has height j - i in every classical type.
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) out.push_back({unit(dim, i) - unit(dim, j), j - i});
  if (family == 'A') return out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int h = 0;
      if (family == 'B') h = (n - i) + (n - j);
      if (family == 'C') h = (n - 1 - i) + (n - 1 - j) + 1;
      if (family == 'D') h = (n - 1 - i) + (n - 1 - j);
      out.push_back({unit(dim, i) + unit(dim, j), h});
    }
  }
  if (family == 'B')
    for (int i = 0; i < n; ++i) out.push_back({unit(dim, i), n - i});
  if (family == 'C')
    for (int i = 0; i < n; ++i) out.push_back({RationalVector(unit(dim, i) * Rational(2)), 2 * (n - 1 - i) + 1});
  return out;
}

std::vector<Positive> g2_positive_roots() {
  auto vec = [](int a, int b, int c) {
    RationalVector v(3);
    v << Rational(a), Rational(b), Rational(c);
    return v;
  };
  return {{vec(1, -1, 0), 1},  {vec(-2, 1, 1), 1}, {vec(-1, 0, 1), 2},
          {vec(0, -1, 1), 3},  {vec(1, -2, 1), 4}, {vec(-1, -1, 2), 5}};
}

RootSystem from_positive(int dim, std::vector<Positive> positive, std::string label) {
  std::stable_sort(positive.begin(), positive.end(),
                   [](const Positive& a, const Positive& b) { return a.height < b.height; });
  std::vector<RationalVector> roots;
  for (const auto& p : positive) roots.push_back(p.root);
  for (const auto& p : positive) roots.push_back(-p.root);
  return RootSystem(dim, std::move(roots), std::move(label));
}

// Reduced row basis of span(S), used for repeated membership tests.
class SpanBasis {
 public:
  SpanBasis(const RootSystem& phi, const RootSet& s) {
    if (s.empty()) return;
    auto ech = row_echelon(phi.root_matrix(s));
    pivots_ = std::move(ech.pivot_columns);
    rows_ = ech.reduced.topRows(static_cast<Eigen::Index>(pivots_.size()));
  }

  bool contains(const RationalVector& v) const {
    RationalVector rest = v;
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const Rational c = rest(pivots_[r]);
      if (!c.is_zero()) rest -= c * rows_.row(static_cast<Eigen::Index>(r)).transpose();
    }
    return is_zero(rest);
  }

 private:
  RationalMatrix rows_;
  std::vector<Eigen::Index> pivots_;
};

RootSet normalized(RootSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

RootSystem::RootSystem(int rank, std::vector<RationalVector> roots, std::optional<std::string> family) {
  if (rank < 1) throw Error(ErrorCode::InvalidRootSystem, "ambient rank must be at least 1");
  auto data = std::make_shared<Data>();
  data->rank = rank;
  data->family = std::move(family);
  for (const auto& v : roots) {
    if (v.size() != rank) throw Error(ErrorCode::InvalidRootSystem, "root has wrong dimension");
    if (is_zero(v)) throw Error(ErrorCode::InvalidRootSystem, "zero vector is not a root");
  }
  data->negation.resize(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (i != j && roots[i] == roots[j]) throw Error(ErrorCode::InvalidRootSystem, "duplicate root");
      if (roots[j] == RationalVector(-roots[i])) {
        data->negation[i] = j;
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::InvalidRootSystem, "roots are not closed under negation");
  }
  data->roots = std::move(roots);
  data_ = std::move(data);
}

RationalMatrix RootSystem::root_matrix(const RootSet& s) const {
  RationalMatrix m(static_cast<Eigen::Index>(s.size()), rank());
  for (std::size_t k = 0; k < s.size(); ++k) m.row(static_cast<Eigen::Index>(k)) = root(s[k]).transpose();
  return m;
}

RationalMatrix RootSystem::root_matrix() const {
  RootSet all(size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return root_matrix(all);
}

bool operator==(const RootSystem& a, const RootSystem& b) {
  return a.data_ == b.data_ || (a.rank() == b.rank() && a.roots() == b.roots());
}

RootSystem build_root_system(char family, int rank) {
  const std::string label = std::string(1, family) + std::to_string(rank);
  switch (family) {
    case 'A':
      if (rank >= 1) return from_positive(rank + 1, classical_positive_roots('A', rank), label);
      break;
    case 'B':
    case 'C':
    case 'D':
      if (rank >= 2) return from_positive(rank, classical_positive_roots(family, rank), label);
      break;
    case 'G':
      if (rank == 2) return from_positive(3, g2_positive_roots(), label);
      break;
    default:
      break;
  }
  throw Error(ErrorCode::Unsupported, "unsupported root system " + label);
}

RootSystem build_root_system(const std::string& label) {
  if (label.size() < 2 || label.find_first_not_of("0123456789", 1) != std::string::npos || label.size() > 4) {
    throw Error(ErrorCode::Unsupported, "unsupported root system label '" + label + "'");
  }
  return build_root_system(label[0], std::stoi(label.substr(1)));
}

RootSystem general_linear_roots(int r) {
  if (r == 1) return RootSystem(1, {});
  return build_root_system('A', r - 1);
}

LeviSubsystem::LeviSubsystem(RootSystem parent, RootSet members)
    : parent_(std::move(parent)), members_(normalized(std::move(members))) {
  if (!members_.empty() && members_.back() >= parent_.size())
    throw Error(ErrorCode::IndexOutOfRange, "root index out of range");
  if (!is_span_closed(parent_, members_))
    throw Error(ErrorCode::InvalidRootSystem, "root subset is not span-closed");
}

bool LeviSubsystem::contains(RootIndex i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

LeviFiltration::LeviFiltration(RootSystem parent, std::vector<LeviSubsystem> levels)
    : parent_(std::move(parent)), levels_(std::move(levels)) {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (!(levels_[i].parent() == parent_))
      throw Error(ErrorCode::InvalidRootSystem, "filtration level over a different root system");
    if (i > 0 && !std::includes(levels_[i].members().begin(), levels_[i].members().end(),
                                levels_[i - 1].members().begin(), levels_[i - 1].members().end())) {
      throw Error(ErrorCode::InvalidRootSystem, "filtration levels are not nested");
    }
  }
}

RootSet LeviFiltration::level(int i) const {
  if (i < 1) throw Error(ErrorCode::IndexOutOfRange, "filtration levels start at 1");
  if (i > length()) {
    RootSet all(parent_.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    return all;
  }
  return levels_[static_cast<std::size_t>(i - 1)].members();
}

int LeviFiltration::depth() const {
  int d = length();
  while (d > 0 && levels_[static_cast<std::size_t>(d - 1)].is_everything()) --d;
  return d;
}

RootSet span_closure(const RootSystem& phi, const RootSet& s) {
  for (auto i : s)
    if (i >= phi.size()) throw Error(ErrorCode::IndexOutOfRange, "root index out of range");
  if (s.empty()) return {};
  const SpanBasis basis(phi, s);
  RootSet out;
  for (RootIndex i = 0; i < phi.size(); ++i)
    if (basis.contains(phi.root(i))) out.push_back(i);
  return out;
}

bool is_span_closed(const RootSystem& phi, const RootSet& s) { return span_closure(phi, s) == normalized(s); }

LeviSubsystem span_closure_subsystem(const RootSystem& phi, const RootSet& s) {
  return LeviSubsystem(phi, span_closure(phi, s));
}

std::vector<LeviSubsystem> enumerate_levi(const RootSystem& phi) {
  if (phi.size() > kEnumerationLimit)
    throw Error(ErrorCode::TooLarge, "root system has more than " + std::to_string(kEnumerationLimit) + " roots");
  // Every span-closed set is reached from the empty set by adding one root
  // at a time and re-closing.
  std::set<RootSet> seen{RootSet{}};
  std::deque<RootSet> queue{RootSet{}};
  while (!queue.empty()) {
    const RootSet current = queue.front();
    queue.pop_front();
    for (RootIndex b = 0; b < phi.size(); ++b) {
      if (std::binary_search(current.begin(), current.end(), b)) continue;
      RootSet grown = current;
      grown.insert(std::upper_bound(grown.begin(), grown.end(), b), b);
      RootSet closed = span_closure(phi, grown);
      if (seen.insert(closed).second) queue.push_back(std::move(closed));
    }
  }
  std::vector<RootSet> sorted(seen.begin(), seen.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const RootSet& a, const RootSet& b) { return a.size() < b.size(); });
  std::vector<LeviSubsystem> out;
  out.reserve(sorted.size());
  for (auto& s : sorted) out.emplace_back(phi, std::move(s));
  return out;
}

int kernel_intersection_dim(const RootSystem& phi, const RootSet& s) {
  if (s.empty()) return phi.rank();
  return phi.rank() - static_cast<int>(rank(phi.root_matrix(s)));
}

RationalMatrix kernel_basis(const RootSystem& phi, const RootSet& s) {
  RationalMatrix basis = nullspace(phi.root_matrix(s));
  for (Eigen::Index c = 0; c < basis.cols(); ++c) basis.col(c) = primitive_integer_vector(basis.col(c));
  return basis;
}

}  // namespace irrstrat
