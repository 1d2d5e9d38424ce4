#include "irrstrat/exactnum/sections.hpp"

#include "irrstrat/errors.hpp"

namespace irrstrat {

MultiPoly section_of_modulus(const MultiPoly& f, std::string_view z) {
  const auto zi = f.variable_index(z);
  if (!zi) throw Error(ErrorCode::BadModulus, "modulus does not involve '" + std::string(z) + "'");
  const auto coeffs = f.coefficients_in(*zi);
  if (coeffs.size() != 2) throw Error(ErrorCode::BadModulus, "modulus is not linear in '" + std::string(z) + "'");
  const MultiPoly one = MultiPoly::constant(coeffs[1].variables(), GaussianRational(1));
  if (!(coeffs[1] == one)) throw Error(ErrorCode::BadModulus, "modulus is not monic in '" + std::string(z) + "'");
  return -coeffs[0];
}

LinearDivision divide_by_linear(const MultiPoly& a, const MultiPoly& q, std::size_t z_index) {
  const auto coeffs = a.coefficients_in(z_index);
  const std::vector<std::string>& base = q.variables();
  // Synthetic division: b_{m-1} = a_m + q b_m, remainder a_0 + q b_0.
  std::vector<MultiPoly> quotient(coeffs.size() > 1 ? coeffs.size() - 1 : 1, MultiPoly(base));
  MultiPoly carry(base);
  for (std::size_t m = coeffs.size(); m-- > 1;) {
    carry = coeffs[m] + q * carry;
    quotient[m - 1] = carry;
  }
  MultiPoly remainder = coeffs[0] + q * carry;
  if (coeffs.size() == 1) remainder = coeffs[0];

  MultiPoly out(a.variables());
  const MultiPoly zvar = MultiPoly::variable(a.variables(), a.variables()[z_index]);
  MultiPoly zpow = MultiPoly::constant(a.variables(), GaussianRational(1));
  if (coeffs.size() > 1) {
    for (const auto& c : quotient) {
      out += c.with_variables(a.variables()) * zpow;
      zpow *= zvar;
    }
  }
  return {std::move(out), std::move(remainder)};
}

std::vector<MultiPoly> section_basis_decompose(const MultiPoly& element, const MultiPoly& f,
                                               std::string_view z, int k) {
  if (k < 1) throw Error(ErrorCode::OutOfRange, "rank k must be at least 1");
  const MultiPoly q = section_of_modulus(f, z);
  MultiPoly current = element.with_variables(f.variables());
  const std::size_t zi = *f.variable_index(z);
  std::vector<MultiPoly> alphas;
  alphas.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    auto [quotient, remainder] = divide_by_linear(current, q, zi);
    alphas.push_back(std::move(remainder));
    current = std::move(quotient);
  }
  return alphas;
}

MultiPoly section_basis_reconstruct(const std::vector<MultiPoly>& alphas, const MultiPoly& f) {
  MultiPoly sum(f.variables());
  MultiPoly fpow = MultiPoly::constant(f.variables(), GaussianRational(1));
  for (const auto& a : alphas) {
    sum += a.with_variables(f.variables()) * fpow;
    fpow *= f;
  }
  return sum;
}

}  // namespace irrstrat
