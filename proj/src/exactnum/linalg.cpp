#include "irrstrat/exactnum/linalg.hpp"

namespace irrstrat {

RationalVector primitive_integer_vector(const RationalVector& v) {
  mpz_class den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) den = lcm(den, v(i).denominator());
  RationalVector scaled = v * Rational(den);
  mpz_class g = 0;
  for (Eigen::Index i = 0; i < scaled.size(); ++i) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled(i).numerator().get_mpz_t());
  }
  if (g == 0) return scaled;
  return scaled / Rational(g);
}

}  // namespace irrstrat
