#include "irrstrat/exactnum/gaussian_integer.hpp"

#include <algorithm>
#include <map>

#include "irrstrat/errors.hpp"

namespace irrstrat {

namespace {

// Nearest integer to num/den for den > 0.
mpz_class round_div(const mpz_class& num, const mpz_class& den) {
  mpz_class twice = 2 * num + den;
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
  return out;
}

mpz_class pollard_rho(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto step = [&](const mpz_class& v) {
      mpz_class r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      mpz_class diff = x - y;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    ++out[n];
    return;
  }
  const mpz_class d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

// A Gaussian prime of norm p for a rational prime p = 1 mod 4.
GaussianInteger split_prime(const mpz_class& p) {
  for (mpz_class c = 2;; ++c) {
    const mpz_class t = powm(c, (p - 1) / 4, p);
    if ((t * t) % p == p - 1) return gaussian_gcd({p, 0}, {t, 1});
  }
}

}  // namespace

std::optional<GaussianInteger> exact_quotient(const GaussianInteger& a, const GaussianInteger& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero in Z[i]");
  const GaussianInteger num = a * b.conj();
  const mpz_class n = b.norm();
  if (num.re % n != 0 || num.im % n != 0) return std::nullopt;
  return GaussianInteger{num.re / n, num.im / n};
}

GaussianInteger gaussian_gcd(GaussianInteger a, GaussianInteger b) {
  while (!b.is_zero()) {
    const GaussianInteger num = a * b.conj();
    const mpz_class n = b.norm();
    const GaussianInteger q{round_div(num.re, n), round_div(num.im, n)};
    GaussianInteger r = a - q * b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n) {
  mpz_class m = abs(n);
  if (m == 0) throw Error(ErrorCode::OutOfRange, "cannot factor zero");
  std::map<mpz_class, unsigned> found;
  for (unsigned long p = 2; p < 1000 && m > 1; ++p) {
    while (m % p == 0) {
      ++found[mpz_class(p)];
      m /= p;
    }
  }
  factor_into(m, found);
  return {found.begin(), found.end()};
}

std::vector<GaussianInteger> gaussian_divisors(const GaussianInteger& n) {
  if (n.is_zero()) throw Error(ErrorCode::OutOfRange, "divisors of zero");
  std::vector<std::pair<GaussianInteger, unsigned>> primes;
  GaussianInteger rest = n;
  auto strip = [&](const GaussianInteger& pi) {
    unsigned e = 0;
    while (auto q = exact_quotient(rest, pi)) {
      rest = *q;
      ++e;
    }
    if (e > 0) primes.emplace_back(pi, e);
  };
  for (const auto& [p, e] : factor_integer(n.norm())) {
    if (p == 2) {
      strip({1, 1});
    } else if (p % 4 == 3) {
      strip({p, 0});
    } else {
      const GaussianInteger pi = split_prime(p);
      strip(pi);
      strip(pi.conj());
    }
  }
  std::vector<GaussianInteger> divisors{{1, 0}};
  for (const auto& [pi, e] : primes) {
    std::vector<GaussianInteger> next;
    for (const auto& d : divisors) {
      GaussianInteger power{1, 0};
      for (unsigned k = 0; k <= e; ++k) {
        next.push_back(d * power);
        power = power * pi;
      }
    }
    divisors = std::move(next);
  }
  return divisors;
}

}  // namespace irrstrat
