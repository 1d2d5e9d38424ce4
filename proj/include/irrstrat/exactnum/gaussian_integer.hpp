#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace irrstrat {

/// Element of Z[i] with GMP components.
struct GaussianInteger {
  mpz_class re = 0;
  mpz_class im = 0;

  mpz_class norm() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }
  GaussianInteger conj() const { return {re, -im}; }

  friend GaussianInteger operator+(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianInteger operator-(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianInteger& a, const GaussianInteger& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// a / b when b divides a exactly in Z[i].
std::optional<GaussianInteger> exact_quotient(const GaussianInteger& a, const GaussianInteger& b);

/// A gcd in Z[i] (defined up to units).
GaussianInteger gaussian_gcd(GaussianInteger a, GaussianInteger b);

/// Prime factorization of |n| > 0 as (prime, exponent), primes ascending.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n);

/// All divisors of a nonzero Gaussian integer, one representative per
/// associate class (multiply by 1, i, -1, -i for the full set).
std::vector<GaussianInteger> gaussian_divisors(const GaussianInteger& n);

}  // namespace irrstrat
