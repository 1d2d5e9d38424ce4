#include "irrstrat/strata.hpp"

#include <algorithm>
#include <cstdlib>

namespace irrstrat {

namespace {

RootSet level_set(const RootOrderVector& d, int i) {
  RootSet out;
  for (RootIndex a = 0; a < d.orders().size(); ++a)
    if (d[a] < i) out.push_back(a);
  return out;
}

void require_relevant(int p, const RootOrderVector& d) {
  if (!is_relevant(p, d)) throw Error(ErrorCode::NotRelevant, "root order vector is not relevant");
}

}  // namespace

bool is_relevant(int p, const RootOrderVector& d) {
  if (p < 0) throw Error(ErrorCode::OutOfRange, "negative pole order");
  if (d.max() > p) throw Error(ErrorCode::OutOfRange, "root order exceeds the pole order");
  if (!d.is_symmetric()) return false;
  for (int i = 1; i <= p; ++i)
    if (!is_span_closed(d.rootsystem(), level_set(d, i))) return false;
  return true;
}

LeviFiltration dvector_to_filtration(int p, const RootOrderVector& d) {
  require_relevant(p, d);
  std::vector<LeviSubsystem> levels;
  for (int i = 1; i <= p; ++i) levels.emplace_back(d.rootsystem(), level_set(d, i));
  return LeviFiltration(d.rootsystem(), std::move(levels));
}

RootOrderVector filtration_to_dvector(const LeviFiltration& filtration) {
  const RootSystem& phi = filtration.parent();
  const int p = filtration.length();
  std::vector<int> d(phi.size(), p);
  for (int i = p; i >= 1; --i)
    for (RootIndex a : filtration.level(i)) d[a] = i - 1;
  return RootOrderVector(phi, std::move(d));
}

namespace {

int filtration_dimension(const LeviFiltration& f) {
  int total = 0;
  for (const auto& level : f.levels()) total += kernel_intersection_dim(f.parent(), level.members());
  return total;
}

}  // namespace

StratumDescriptor::StratumDescriptor(int p, RootOrderVector d)
    : p_(p), d_(std::move(d)), filtration_(dvector_to_filtration(p_, d_)), dimension_(filtration_dimension(filtration_)) {}

StratumDescriptor::StratumDescriptor(LeviFiltration filtration)
    : p_(filtration.length()),
      d_(filtration_to_dvector(filtration)),
      filtration_(std::move(filtration)),
      dimension_(filtration_dimension(filtration_)) {}

StratumDescriptor::StratumDescriptor(LeviFiltration filtration, int dimension)
    : p_(filtration.length()), d_(filtration_to_dvector(filtration)), filtration_(std::move(filtration)), dimension_(dimension) {}

namespace {

struct LeviPoset {
  std::vector<LeviSubsystem> levi;
  /// contained[a][b]: levi[a] is a subset of levi[b].
  std::vector<std::vector<bool>> contained;

  explicit LeviPoset(const RootSystem& phi) : levi(enumerate_levi(phi)) {
    const std::size_t n = levi.size();
    contained.assign(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        contained[a][b] = std::includes(levi[b].members().begin(), levi[b].members().end(),
                                        levi[a].members().begin(), levi[a].members().end());
  }

  /// chains[len][a]: number of chains of the given length starting at a.
  std::vector<std::vector<std::size_t>> chain_counts(int p) const {
    const std::size_t n = levi.size();
    std::vector<std::vector<std::size_t>> counts(static_cast<std::size_t>(p) + 1,
                                                 std::vector<std::size_t>(n, 0));
    if (p >= 1) std::fill(counts[1].begin(), counts[1].end(), 1);
    for (int len = 2; len <= p; ++len)
      for (std::size_t a = 0; a < n; ++a) {
        std::size_t total = 0;
        for (std::size_t b = 0; b < n; ++b)
          if (contained[a][b]) total = std::min(kStrataLimit + 1, total + counts[len - 1][b]);
        counts[len][a] = total;
      }
    return counts;
  }
};

std::size_t total_chains(const LeviPoset& poset, int p) {
  if (p < 0) throw Error(ErrorCode::OutOfRange, "negative pole order");
  if (p == 0) return 1;
  const auto counts = poset.chain_counts(p);
  std::size_t total = 0;
  for (std::size_t c : counts[static_cast<std::size_t>(p)]) total = std::min(kStrataLimit + 1, total + c);
  return total;
}

}  // namespace

std::size_t count_strata(const RootSystem& phi, int p) {
  const std::size_t n = total_chains(LeviPoset(phi), p);
  if (n > kStrataLimit) throw Error(ErrorCode::TooLarge, "too many strata to count exactly");
  return n;
}

std::vector<StratumDescriptor> enumerate_strata(const RootSystem& phi, int p) {
  const LeviPoset poset(phi);
  if (total_chains(poset, p) > kStrataLimit) throw Error(ErrorCode::TooLarge, "too many strata to enumerate");
  std::vector<int> kernel_dim;
  for (const auto& l : poset.levi) kernel_dim.push_back(kernel_intersection_dim(phi, l.members()));
  std::vector<StratumDescriptor> out;
  std::vector<std::size_t> chain;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(chain.size()) == p) {
      std::vector<LeviSubsystem> levels;
      int dimension = 0;
      for (std::size_t idx : chain) {
        levels.push_back(poset.levi[idx]);
        dimension += kernel_dim[idx];
      }
      out.push_back(StratumDescriptor(LeviFiltration(phi, std::move(levels)), dimension));
      return;
    }
    for (std::size_t b = 0; b < poset.levi.size(); ++b) {
      if (!chain.empty() && !poset.contained[chain.back()][b]) continue;
      chain.push_back(b);
      self(self);
      chain.pop_back();
    }
  };
  extend(extend);
  return out;
}

int stratum_dimension(int p, const RootOrderVector& d) {
  require_relevant(p, d);
  int total = 0;
  for (int i = 1; i <= p; ++i) total += kernel_intersection_dim(d.rootsystem(), level_set(d, i));
  return total;
}

namespace {

long from_key(int key) { return key % 2 == 1 ? (key + 1) / 2 : -(key / 2); }

/// First lattice combination of the kernel columns avoiding every functional.
RationalVector search_level(const RationalMatrix& kernel, const std::vector<RationalVector>& avoid, int rank) {
  const Eigen::Index m = kernel.cols();
  auto acceptable = [&](const RationalVector& v) {
    for (const auto& beta : avoid)
      if (beta.dot(v).is_zero()) return false;
    return true;
  };
  if (m == 0 || avoid.empty()) {
    RationalVector zero = RationalVector::Zero(rank);
    if (acceptable(zero)) return zero;
    if (m == 0) throw Error(ErrorCode::SearchExhausted, "empty kernel cannot avoid a hyperplane");
  }
  // A grid of side 2h+1 cannot be covered by fewer than 2h+1 hyperplanes.
  const int max_height = static_cast<int>(avoid.size()) + 1;
  for (int h = 1; h <= max_height; ++h) {
    std::vector<int> keys(static_cast<std::size_t>(m), 0);
    const int top = 2 * h;
    while (true) {
      if (*std::max_element(keys.begin(), keys.end()) >= top - 1) {
        RationalVector v = RationalVector::Zero(rank);
        for (Eigen::Index j = 0; j < m; ++j) {
          const long c = from_key(keys[static_cast<std::size_t>(j)]);
          if (c != 0) v += kernel.col(j) * Rational(c);
        }
        if (acceptable(v)) return v;
      }
      Eigen::Index pos = m - 1;
      while (pos >= 0 && keys[static_cast<std::size_t>(pos)] == top) keys[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++keys[static_cast<std::size_t>(pos)];
    }
  }
  throw Error(ErrorCode::SearchExhausted, "no lattice point avoids the hyperplanes");
}

}  // namespace

IrregularType stratum_witness(int p, const RootOrderVector& d) {
  require_relevant(p, d);
  const RootSystem& phi = d.rootsystem();
  std::vector<GaussianVector> coefficients;
  for (int i = 1; i <= p; ++i) {
    std::vector<RationalVector> avoid;
    for (RootIndex a = 0; a < phi.size(); ++a)
      if (d[a] == i) avoid.push_back(phi.root(a));
    const RationalVector v = search_level(kernel_basis(phi, level_set(d, i)), avoid, phi.rank());
    coefficients.push_back(v.unaryExpr([](const Rational& x) { return GaussianRational(x); }));
  }
  return IrregularType(phi, p, std::move(coefficients));
}

bool closure_leq(const RootOrderVector& d_prime, const RootOrderVector& d) {
  if (!(d_prime.rootsystem() == d.rootsystem()))
    throw Error(ErrorCode::DimensionMismatch, "root order vectors over different root systems");
  for (RootIndex a = 0; a < d.orders().size(); ++a)
    if (d_prime[a] > d[a]) return false;
  return true;
}

}  // namespace irrstrat
