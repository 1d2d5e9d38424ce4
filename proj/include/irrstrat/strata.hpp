#pragma once

#include <vector>

#include "irrstrat/irrtype.hpp"
#include "irrstrat/rootsys.hpp"

namespace irrstrat {

/// One stratum of the irregular types of pole order <= p: its root order
/// vector together with the equivalent Levi filtration.
class StratumDescriptor {
 public:
  /// Throws NotRelevant (or OutOfRange for orders above p).
  StratumDescriptor(int p, RootOrderVector d);
  explicit StratumDescriptor(LeviFiltration filtration);

  const RootSystem& rootsystem() const { return d_.rootsystem(); }
  int p() const { return p_; }
  const RootOrderVector& d() const { return d_; }
  const LeviFiltration& filtration() const { return filtration_; }
  /// Same value as stratum_dimension(p(), d()).
  int dimension() const { return dimension_; }

  friend bool operator==(const StratumDescriptor& a, const StratumDescriptor& b) {
    return a.p_ == b.p_ && a.d_ == b.d_;
  }

 private:
  friend std::vector<StratumDescriptor> enumerate_strata(const RootSystem& phi, int p);
  StratumDescriptor(LeviFiltration filtration, int dimension);

  int p_;
  RootOrderVector d_;
  LeviFiltration filtration_;
  int dimension_;
};

/// Upper bound on the number of chains enumerate_strata will produce.
inline constexpr std::size_t kStrataLimit = 1'000'000;

/// Symmetric and every level {alpha : d_alpha < i}, 1 <= i <= p, span-closed.
/// Throws OutOfRange if some d_alpha exceeds p.
bool is_relevant(int p, const RootOrderVector& d);

/// Levels Phi_i = {alpha : d_alpha < i}. Throws NotRelevant.
LeviFiltration dvector_to_filtration(int p, const RootOrderVector& d);

/// d_alpha = i for alpha in Phi_{i+1} minus Phi_i, with Phi_{p+1} = Phi.
RootOrderVector filtration_to_dvector(const LeviFiltration& filtration);

/// All chains Phi_1 <= ... <= Phi_p of Levi subsystems, ordered
/// lexicographically by the positions of their levels in enumerate_levi.
/// Throws TooLarge past kEnumerationLimit roots or kStrataLimit chains.
std::vector<StratumDescriptor> enumerate_strata(const RootSystem& phi, int p);

/// Number of chains, without materializing them.
std::size_t count_strata(const RootSystem& phi, int p);

/// sum_{i=1..p} dim of the intersection of ker(alpha) over d_alpha < i.
int stratum_dimension(int p, const RootOrderVector& d);

/// Smallest-height integer point of the stratum. For each level i the
/// coefficient A_i is the first lattice point of the kernel of Phi_i, by
/// max-norm height and then lexicographically in the order 0, 1, -1, 2, ...,
/// that avoids ker(beta) for every beta with d_beta = i.
IrregularType stratum_witness(int p, const RootOrderVector& d);

/// d' <= d pointwise. Throws DimensionMismatch for different root systems.
bool closure_leq(const RootOrderVector& d_prime, const RootOrderVector& d);

}  // namespace irrstrat
