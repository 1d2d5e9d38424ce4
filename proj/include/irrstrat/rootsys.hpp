#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "irrstrat/exactnum/linalg.hpp"

namespace irrstrat {

using RootIndex = std::size_t;
using RootSet = std::vector<RootIndex>;  ///< sorted, duplicate-free

/// Largest root system accepted by the exhaustive enumerations.
inline constexpr std::size_t kEnumerationLimit = 60;

/// Finite set of nonzero rational vectors in Q^r, closed under negation.
/// The ambient dimension r is the dimension of the Cartan algebra t; the
/// roots need not span it. Copies share the immutable root data.
class RootSystem {
 public:
  /// Validates closure under negation, no zero vector, no duplicates.
  /// Throws InvalidRootSystem.
  RootSystem(int rank, std::vector<RationalVector> roots, std::optional<std::string> family = std::nullopt);

  int rank() const { return data_->rank; }
  std::size_t size() const { return data_->roots.size(); }
  const std::vector<RationalVector>& roots() const { return data_->roots; }
  const RationalVector& root(RootIndex i) const { return data_->roots.at(i); }
  RootIndex negation(RootIndex i) const { return data_->negation.at(i); }
  const std::optional<std::string>& family() const { return data_->family; }

  /// Roots of S as rows of a |S| x r matrix.
  RationalMatrix root_matrix(const RootSet& s) const;
  /// Roots as rows, all of them.
  RationalMatrix root_matrix() const;

  friend bool operator==(const RootSystem& a, const RootSystem& b);

 private:
  struct Data {
    int rank;
    std::vector<RationalVector> roots;
    std::vector<RootIndex> negation;
    std::optional<std::string> family;
  };
  std::shared_ptr<const Data> data_;
};

/// Standard realizations with integer coordinates:
///   A_n (n >= 1): e_i - e_j in Q^{n+1};
///   B_n, C_n, D_n (n >= 2): in Q^n;
///   G_2: in the trace-zero plane of Q^3.
/// Positive roots come first, sorted by height, then their negatives in the
/// same order. Throws Unsupported for any other (family, rank).
RootSystem build_root_system(char family, int rank);

/// Parses labels like "A2", "B3", "G2".
RootSystem build_root_system(const std::string& label);

/// Roots e_i - e_j of gl_r on the full diagonal Cartan Q^r (no roots for r = 1).
RootSystem general_linear_roots(int r);

/// Span-closed subset of a root system: span(members) intersected with the
/// roots is exactly members.
class LeviSubsystem {
 public:
  /// Throws InvalidRootSystem unless members is span-closed.
  LeviSubsystem(RootSystem parent, RootSet members);

  const RootSystem& parent() const { return parent_; }
  const RootSet& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(RootIndex i) const;
  bool is_everything() const { return members_.size() == parent_.size(); }

  friend bool operator==(const LeviSubsystem& a, const LeviSubsystem& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  RootSystem parent_;
  RootSet members_;
};

/// Nested chain Phi_1 <= ... <= Phi_p of Levi subsystems; levels may equal Phi.
class LeviFiltration {
 public:
  /// Throws InvalidRootSystem if the chain is not nested.
  LeviFiltration(RootSystem parent, std::vector<LeviSubsystem> levels);

  const RootSystem& parent() const { return parent_; }
  int length() const { return static_cast<int>(levels_.size()); }
  /// Level i for 1 <= i; levels past the length are all of Phi.
  RootSet level(int i) const;
  const std::vector<LeviSubsystem>& levels() const { return levels_; }
  /// Least d with Phi_{d+1} = Phi.
  int depth() const;

  friend bool operator==(const LeviFiltration& a, const LeviFiltration& b) {
    return a.parent_ == b.parent_ && a.levels_ == b.levels_;
  }

 private:
  RootSystem parent_;
  std::vector<LeviSubsystem> levels_;
};

/// Phi intersected with span_Q(S).
RootSet span_closure(const RootSystem& phi, const RootSet& s);
bool is_span_closed(const RootSystem& phi, const RootSet& s);
LeviSubsystem span_closure_subsystem(const RootSystem& phi, const RootSet& s);

/// Every Levi subsystem, ordered by size then lexicographically by members.
/// Throws TooLarge if |Phi| exceeds kEnumerationLimit.
std::vector<LeviSubsystem> enumerate_levi(const RootSystem& phi);

/// dim of the intersection of ker(alpha), alpha in S = r - rank(S).
int kernel_intersection_dim(const RootSystem& phi, const RootSet& s);

/// Primitive integer basis of the intersection of ker(alpha), alpha in S,
/// one basis vector per column.
RationalMatrix kernel_basis(const RootSystem& phi, const RootSet& s);

}  // namespace irrstrat
