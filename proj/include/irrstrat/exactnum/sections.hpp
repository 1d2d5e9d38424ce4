#pragma once

#include <string_view>
#include <vector>

#include "irrstrat/exactnum/polynomial.hpp"

namespace irrstrat {

/// Quotient and remainder of a polynomial by a modulus z - q(x), where q does
/// not involve z. The remainder is the value at z = q(x) and lives over the
/// base variables (all variables except z).
struct LinearDivision {
  MultiPoly quotient;
  MultiPoly remainder;
};

/// Checks that f = z - q(x) and returns q over the base variables.
/// Throws BadModulus otherwise.
MultiPoly section_of_modulus(const MultiPoly& f, std::string_view z);

LinearDivision divide_by_linear(const MultiPoly& a, const MultiPoly& q, std::size_t z_index);

/// Coordinates of `element` in the basis 1, f, ..., f^{k-1} of A/(f^k) over
/// A/(f), where A/(f) is identified with polynomials in the base variables
/// via z -> q(x). Returns alpha_0..alpha_{k-1} over the base variables.
///
/// The coordinates are peeled off one at a time: alpha_j is the value at
/// z = q(x) of the current remainder, which is then divided exactly by f.
std::vector<MultiPoly> section_basis_decompose(const MultiPoly& element, const MultiPoly& f,
                                               std::string_view z, int k);

/// sum_j alpha_j f^j over the variables of f.
MultiPoly section_basis_reconstruct(const std::vector<MultiPoly>& alphas, const MultiPoly& f);

}  // namespace irrstrat
