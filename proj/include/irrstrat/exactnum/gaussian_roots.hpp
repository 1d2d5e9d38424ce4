#pragma once

#include <vector>

#include "irrstrat/exactnum/gaussian.hpp"

namespace irrstrat {

/// Dense univariate polynomial over Q(i); coeffs[j] multiplies x^j.
using UnivariatePoly = std::vector<GaussianRational>;

GaussianRational evaluate(const UnivariatePoly& p, const GaussianRational& x);
UnivariatePoly derivative(const UnivariatePoly& p);
/// Monic gcd; the zero polynomial is represented by an empty vector.
UnivariatePoly polynomial_gcd(UnivariatePoly a, UnivariatePoly b);

/// True when p has no repeated root over the algebraic closure.
bool is_squarefree(const UnivariatePoly& p);

/// Distinct roots of p lying in Q(i), sorted by (re, im).
///
/// The polynomial is rescaled to a monic one over Z[i]; its roots in Q(i)
/// are then Gaussian integers dividing the constant term, which are
/// enumerated from the factorization of that term and checked exactly.
std::vector<GaussianRational> roots_in_gaussian_rationals(const UnivariatePoly& p);

}  // namespace irrstrat
