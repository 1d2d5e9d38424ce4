#include "irrstrat/exactnum/gaussian_roots.hpp"

#include <algorithm>

#include "irrstrat/errors.hpp"
#include "irrstrat/exactnum/gaussian_integer.hpp"

namespace irrstrat {

namespace {

UnivariatePoly trimmed(UnivariatePoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

UnivariatePoly monic(UnivariatePoly p) {
  p = trimmed(std::move(p));
  if (p.empty()) return p;
  const GaussianRational lead_inv = p.back().inverse();
  for (auto& c : p) c *= lead_inv;
  return p;
}

UnivariatePoly remainder(UnivariatePoly a, const UnivariatePoly& b) {
  a = trimmed(std::move(a));
  const std::size_t db = b.size() - 1;
  const GaussianRational lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const GaussianRational factor = a.back() * lead_inv;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= factor * b[j];
    a = trimmed(std::move(a));
  }
  return a;
}

GaussianInteger to_integer(const GaussianRational& z) {
  return {z.re().numerator(), z.im().numerator()};
}

bool is_root(const std::vector<GaussianInteger>& q, const GaussianInteger& y) {
  GaussianInteger acc;
  for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * y + *it;
  return acc.is_zero();
}

}  // namespace

GaussianRational evaluate(const UnivariatePoly& p, const GaussianRational& x) {
  GaussianRational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UnivariatePoly derivative(const UnivariatePoly& p) {
  UnivariatePoly d;
  for (std::size_t j = 1; j < p.size(); ++j) d.push_back(GaussianRational(static_cast<long>(j)) * p[j]);
  return trimmed(std::move(d));
}

UnivariatePoly polynomial_gcd(UnivariatePoly a, UnivariatePoly b) {
  a = trimmed(std::move(a));
  b = trimmed(std::move(b));
  while (!b.empty()) {
    UnivariatePoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

bool is_squarefree(const UnivariatePoly& p) {
  const UnivariatePoly t = trimmed(p);
  if (t.size() <= 2) return !t.empty();
  return polynomial_gcd(t, derivative(t)).size() == 1;
}

std::vector<GaussianRational> roots_in_gaussian_rationals(const UnivariatePoly& p) {
  UnivariatePoly m = monic(p);
  if (m.empty()) throw Error(ErrorCode::OutOfRange, "roots of the zero polynomial");
  std::vector<GaussianRational> roots;
  if (m.size() > 1 && m.front().is_zero()) {
    roots.emplace_back(0);
    while (m.front().is_zero()) m.erase(m.begin());
  }
  const std::size_t n = m.size() - 1;
  if (n > 0) {
    // x = y / D turns m into a monic polynomial over Z[i].
    mpz_class den = 1;
    for (const auto& c : m) den = lcm(lcm(den, c.re().denominator()), c.im().denominator());
    std::vector<GaussianInteger> q(n + 1);
    Rational scale(1);
    for (std::size_t j = n + 1; j-- > 0;) {
      q[j] = to_integer(m[j] * GaussianRational(scale));
      scale *= Rational(den);
    }
    const GaussianInteger units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (const auto& d : gaussian_divisors(q[0])) {
      for (const auto& u : units) {
        const GaussianInteger y = d * u;
        if (!is_root(q, y)) continue;
        roots.emplace_back(Rational(y.re, den), Rational(y.im, den));
      }
    }
  }
  std::sort(roots.begin(), roots.end(), lex_less);
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace irrstrat
