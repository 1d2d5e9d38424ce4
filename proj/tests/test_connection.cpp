#include <doctest.h>

#include "support/connection_gen.hpp"

using namespace irrstrat;
using Series = LaurentMatrixSeries<GaussianRational>;

namespace {

GaussianRational q(long a, long b = 1) { return GaussianRational(Rational(mpz_class(a), mpz_class(b))); }

Series scalar_series(int low, int high, std::map<int, GaussianRational> c) {
  Series s(1, low, high);
  for (auto& [e, v] : c) s.coefficient(e)(0, 0) = v;
  return s;
}

ConnectionGerm diag2(int k, int n, std::map<int, std::pair<long, long>> c) {
  Series s(2, -(k + 1), n);
  for (auto& [e, v] : c) {
    s.coefficient(e)(0, 0) = GaussianRational(v.first);
    s.coefficient(e)(1, 1) = GaussianRational(v.second);
  }
  return ConnectionGerm(k, s);
}

GaussianVector gv(std::vector<long> c) {
  GaussianVector v(static_cast<Eigen::Index>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) v(static_cast<Eigen::Index>(i)) = GaussianRational(c[i]);
  return v;
}

}  // namespace

TEST_CASE("connection germ entries round-trip") {
  const ConnectionEntry e{GaussianTail(3, {q(1), q(0), q(-2)}), GaussianSeries(2, {q(5), q(7)})};
  const ConnectionGerm m(1, 2, 2, {{e}});
  CHECK(m.coefficient(-3)(0, 0) == q(-2));
  CHECK(m.coefficient(-1)(0, 0) == q(1));
  CHECK(m.coefficient(1)(0, 0) == q(7));
  CHECK(m.entry(0, 0).tail == e.tail);
  CHECK(m.entry(0, 0).regular == e.regular);
  CHECK_THROWS_AS(ConnectionGerm(1, 1, 2, {{e}}), Error);
}

TEST_CASE("gauge transform examples") {
  oracle::Rng rng(51);
  const ConnectionGerm m = oracle::random_diagonal_connection(rng, 2, 2, 3, true);
  CHECK(gauge_transform(m, GaugeElement::identity(2, 6)) == m);

  // M = 0: the result is dg g^{-1}.
  const ConnectionGerm zero(1, Series(2, -2, 3));
  const GaugeElement g = oracle::random_unipotent_gauge(rng, 2, 5, 1);
  const ConnectionGerm dg = gauge_transform(zero, g);
  for (int e = -2; e < 0; ++e) CHECK(is_zero(dg.coefficient(e)));
  const Series expected = matrix_series_derivative(g.series()) * matrix_series_inverse(g.series());
  for (int e = 0; e < dg.precision(); ++e) CHECK(dg.coefficient(e) == expected.at(e));

  // r = 1, M = -2 z^-3 dz, g = 1 + z: M + dz / (1 + z).
  const ConnectionGerm m1(2, scalar_series(-3, 3, {{-3, q(-2)}}));
  const GaugeElement g1(scalar_series(0, 6, {{0, q(1)}, {1, q(1)}}));
  const ConnectionGerm out = gauge_transform(m1, g1);
  CHECK(out.precision() == 3);
  CHECK(out == ConnectionGerm(2, scalar_series(-3, 3, {{-3, q(-2)}, {0, q(1)}, {1, q(-1)}, {2, q(1)}})));
}

TEST_CASE("gauge transform precision contract") {
  oracle::Rng rng(52);
  const ConnectionGerm m = oracle::random_diagonal_connection(rng, 2, 2, 4, true);
  CHECK(gauge_transform(m, GaugeElement::identity(2, 7)).precision() == 4);
  CHECK(gauge_transform(m, GaugeElement::identity(2, 5)).precision() == 2);
  try {
    gauge_transform(m, GaugeElement::identity(2, 3));
    FAIL("expected PrecisionExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PrecisionExhausted);
  }
  CHECK_THROWS_AS(gauge_transform(m, GaugeElement::identity(3, 9)), Error);
}

TEST_CASE("gauge elements must be invertible") {
  GaussianMatrix singular = GaussianMatrix::Zero(2, 2);
  singular(0, 0) = q(1);
  CHECK_THROWS_AS(GaugeElement::constant(singular, 3), Error);
  const std::vector<std::vector<GaussianSeries>> entries{{GaussianSeries(2, {q(0), q(1)})}};
  CHECK_THROWS_AS(GaugeElement(1, 2, entries), Error);
}

TEST_CASE("gauge action is a group action up to precision") {
  oracle::Rng rng(53);
  for (int n = 0; n < 60; ++n) {
    const int r = oracle::uniform(rng, 1, 3), k = oracle::uniform(rng, 0, 3);
    const ConnectionGerm m = oracle::random_diagonal_connection(rng, r, k, oracle::uniform(rng, 1, 3), false);
    const GaugeElement g = GaugeElement::constant(oracle::random_invertible(rng, r), 12) * oracle::random_unipotent_gauge(rng, r, 12, 1);
    const GaugeElement h = oracle::random_unipotent_gauge(rng, r, 12, 1) * GaugeElement::constant(oracle::random_invertible(rng, r), 12);
    const ConnectionGerm twice = gauge_transform(gauge_transform(m, g), h);
    const ConnectionGerm once = gauge_transform(m, h * g);
    const int common = std::min(twice.precision(), once.precision());
    CHECK(ConnectionGerm(k, twice.series().truncated(common)) == ConnectionGerm(k, once.series().truncated(common)));
  }
}

TEST_CASE("untwisted test") {
  CHECK(is_untwisted_in_basis(diag2(2, 2, {{-3, {1, 2}}, {-2, {0, 5}}})));
  Series off(2, -3, 2);
  off.coefficient(-1)(0, 1) = q(1);
  CHECK(is_untwisted_in_basis(ConnectionGerm(2, off)));
  off.coefficient(-2)(1, 0) = q(1);
  CHECK_FALSE(is_untwisted_in_basis(ConnectionGerm(2, off)));
  try {
    extract_irregular_type(ConnectionGerm(2, off));
    FAIL("expected Twisted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Twisted);
  }
}

TEST_CASE("irregular type extraction") {
  // Only a residue: the irregular type vanishes.
  Series reg(2, -3, 2);
  reg.coefficient(-1)(0, 1) = q(4);
  reg.coefficient(-1)(0, 0) = q(3);
  CHECK(extract_irregular_type(ConnectionGerm(2, reg)).is_zero());
  // diag(-2 z^-3, 3 z^-2) dz.
  const auto qq = extract_irregular_type(diag2(2, 1, {{-3, {-2, 0}}, {-2, {0, 3}}}));
  CHECK(qq.p() == 2);
  CHECK(same_matrix(qq.coefficient(2), gv({1, 0})));
  CHECK(same_matrix(qq.coefficient(1), gv({0, -3})));
  CHECK(qq.rootsystem() == general_linear_roots(2));
}

TEST_CASE("extraction inverts the differential") {
  oracle::Rng rng(54);
  for (int n = 0; n < 100; ++n) {
    const int r = oracle::uniform(rng, 1, 4), p = oracle::uniform(rng, 0, 4);
    std::vector<GaussianVector> a;
    for (int j = 0; j < p; ++j) a.push_back(oracle::random_vector(rng, r));
    const IrregularType q0(general_linear_roots(r), p, a);
    const ConnectionGerm m = ConnectionGerm::differential(q0, oracle::uniform(rng, 1, 3));
    CHECK(is_untwisted_in_basis(m));
    CHECK(extract_irregular_type(m) == q0);
  }
}

TEST_CASE("diagonalization examples") {
  const ConnectionGerm m = diag2(2, 2, {{-3, {3, 1}}, {-2, {1, 1}}, {0, {4, 4}}});
  const Diagonalization d = leading_regular_diagonalize(m);
  CHECK(d.gauge == GaugeElement::identity(2, 2 + 2 + 1));
  CHECK(d.result == m);

  // A constant conjugate of a diagonal connection.
  oracle::Rng rng(55);
  for (int n = 0; n < 20; ++n) {
    const int r = oracle::uniform(rng, 2, 3), k = oracle::uniform(rng, 1, 3);
    const ConnectionGerm m0 = oracle::random_diagonal_connection(rng, r, k, 2, true);
    const ConnectionGerm mc = gauge_transform(m0, GaugeElement::constant(oracle::random_invertible(rng, r), 2 + k + 1));
    const Diagonalization dd = leading_regular_diagonalize(mc);
    CHECK(dd.result == gauge_transform(mc, dd.gauge));
    CHECK(oracle::coordinate_tuples(extract_irregular_type(dd.result)) == oracle::coordinate_tuples(extract_irregular_type(m0)));
  }
}

TEST_CASE("diagonalization of gauge-scrambled diagonal connections") {
  oracle::Rng rng(56);
  for (int n = 0; n < 40; ++n) {
    const int r = oracle::uniform(rng, 1, 3), k = oracle::uniform(rng, 1, 4), prec = oracle::uniform(rng, 1, 3);
    const ConnectionGerm m0 = oracle::random_diagonal_connection(rng, r, k, prec, true);
    const ConnectionGerm m = gauge_transform(m0, oracle::random_unipotent_gauge(rng, r, prec + k + 1, 1));
    const Diagonalization d = leading_regular_diagonalize(m);
    CHECK(d.result.precision() == m.precision());
    CHECK(is_untwisted_in_basis(d.result));
    const auto tuples = oracle::coordinate_tuples(extract_irregular_type(d.result));
    CHECK(tuples == oracle::coordinate_tuples(extract_irregular_type(m0)));
    // A second scramble of the same connection gives the same answer.
    const ConnectionGerm m2 = gauge_transform(m0, oracle::random_unipotent_gauge(rng, r, prec + k + 1, 1));
    CHECK(oracle::coordinate_tuples(extract_irregular_type(leading_regular_diagonalize(m2).result)) == tuples);
  }
}

TEST_CASE("diagonalization with non-real eigenvalues") {
  // Leading matrix [[0, -1], [1, 0]] has eigenvalues +-i.
  Series s(2, -3, 2);
  s.coefficient(-3)(0, 1) = q(-1);
  s.coefficient(-3)(1, 0) = q(1);
  s.coefficient(-2)(0, 0) = q(2);
  const Diagonalization d = leading_regular_diagonalize(ConnectionGerm(2, s));
  CHECK(is_untwisted_in_basis(d.result));
  const auto q2 = extract_irregular_type(d.result).coefficient(2);
  std::set<std::string> values{q2(0).to_string(), q2(1).to_string()};
  // A_2 = -C_{-3}/2 with eigenvalues +-i.
  CHECK(values == std::set<std::string>{(GaussianRational::i() * q(1, 2)).to_string(), (GaussianRational::i() * q(-1, 2)).to_string()});
}

TEST_CASE("diagonalization errors") {
  auto code_of = [](const ConnectionGerm& m) {
    try {
      leading_regular_diagonalize(m);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Unsupported;
  };
  CHECK(code_of(diag2(2, 1, {{-3, {1, 1}}})) == ErrorCode::LeadingNotRegular);
  Series s(2, -3, 1);
  s.coefficient(-3)(0, 1) = q(2);
  s.coefficient(-3)(1, 0) = q(1);
  CHECK(code_of(ConnectionGerm(2, s)) == ErrorCode::NotSplitOverField);
  CHECK(code_of(diag2(0, 1, {{-1, {1, 2}}})) == ErrorCode::OutOfRange);
}

TEST_CASE("framing invariance examples") {
  oracle::Rng rng(57);
  const ConnectionGerm m = oracle::random_diagonal_connection(rng, 2, 2, 2, true);
  CHECK(verify_framing_invariance(m, GaugeElement::identity(2, 5)));
  GaussianMatrix c = GaussianMatrix::Identity(2, 2);
  c(0, 1) = q(1);
  try {
    verify_framing_invariance(m, GaugeElement::constant(c, 5));
    FAIL("expected NotIdentityModZ");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIdentityModZ);
  }
}

TEST_CASE("framing invariance on random instances") {
  oracle::Rng rng(58);
  for (int n = 0; n < 80; ++n) {
    const int r = oracle::uniform(rng, 1, 3), k = oracle::uniform(rng, 1, 4);
    const auto inst = oracle::framing_instance(rng, r, k, n % 2 == 0);
    CHECK(is_untwisted_in_basis(inst.m));
    CHECK(is_untwisted_in_basis(gauge_transform(inst.m, inst.g)));
    CHECK(verify_framing_invariance(inst.m, inst.g));
  }
}
