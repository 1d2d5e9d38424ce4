#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "irrstrat/exactnum/gaussian.hpp"

namespace irrstrat {

/// Exponent tuple, one entry per declared variable.
using Exponent = std::vector<int>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse polynomial over Q(i) in an ordered list of named variables.
/// Zero coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, GaussianRational, GrlexLess>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);
  MultiPoly(GaussianRational c);  // NOLINT: constant without variables
  template <std::integral I>
  MultiPoly(I c) : MultiPoly(GaussianRational(c)) {}  // NOLINT

  static MultiPoly constant(std::vector<std::string> variables, const GaussianRational& c);
  /// Throws VariableMismatch if name is not among variables.
  static MultiPoly variable(std::vector<std::string> variables, std::string_view name);
  static MultiPoly monomial(std::vector<std::string> variables, Exponent exponent, const GaussianRational& c);

  const std::vector<std::string>& variables() const { return variables_; }
  const Terms& terms() const { return terms_; }
  std::optional<std::size_t> variable_index(std::string_view name) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GaussianRational constant_term() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;

  GaussianRational evaluate(std::span<const GaussianRational> point) const;
  /// Replaces variable i by images[i]; all images must share one variable list.
  MultiPoly substitute(std::span<const MultiPoly> images) const;
  MultiPoly pow(unsigned exponent) const;

  /// Writes the polynomial as sum_m c_m * var^m; the c_m live over the
  /// remaining variables.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;
  /// Reinterprets the polynomial over a superset of its variables.
  MultiPoly with_variables(const std::vector<std::string>& superset) const;
  /// Drops variables that do not occur; throws VariableMismatch otherwise.
  MultiPoly without_variable(std::size_t var) const;

  std::string to_string() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Adds c * x^exponent, dropping the term if it cancels.
  void add_term(const Exponent& exponent, const GaussianRational& c);

 private:
  /// Brings two operands onto one variable list. A variable-free constant
  /// adopts the other operand's variables; any other mismatch throws.
  static void align(MultiPoly& a, MultiPoly& b);

  std::vector<std::string> variables_;
  Terms terms_;
};

}  // namespace irrstrat
