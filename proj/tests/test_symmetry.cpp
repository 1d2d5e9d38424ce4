#include <doctest.h>

#include "support/oracles.hpp"

using namespace irrstrat;
using oracle::Rng;

namespace {

GaussianRational q(long a, long b = 1) { return GaussianRational(Rational(mpz_class(a), mpz_class(b))); }

GaussianVector gv(std::vector<long> c) {
  GaussianVector v(static_cast<Eigen::Index>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) v(static_cast<Eigen::Index>(i)) = GaussianRational(c[i]);
  return v;
}

GaussianVector scaled(GaussianVector v, const GaussianRational& c) {
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = c * v(i);
  return v;
}

IrregularTypeAtInfinity random_at_infinity(Rng& rng, const RootSystem& phi, int p, double zero_rate = 0.2) {
  std::vector<GaussianVector> a;
  for (int j = 0; j < p; ++j)
    a.push_back(oracle::coin(rng, zero_rate) ? GaussianVector(GaussianVector::Zero(phi.rank())) : oracle::random_vector(rng, phi.rank(), 4, 3));
  return IrregularTypeAtInfinity(phi, p, a);
}

AffineG1 random_g1(Rng& rng) { return AffineG1(oracle::small_gaussian(rng, 3, 2), oracle::nonzero_gaussian(rng, 3, 2)); }

const RootSystem& a2() {
  static const RootSystem phi = build_root_system('A', 2);
  return phi;
}

}  // namespace

TEST_CASE("convention swap") {
  const auto zero = IrregularType::zero(a2(), 2);
  CHECK(convention_swap(convention_swap(zero)) == zero);
  CHECK(convention_swap(zero).is_zero());
  const IrregularType single(a2(), 1, {gv({1, 2, 3})});
  CHECK(same_matrix(convention_swap(single).coefficient(1), gv({1, 2, 3})));
  Rng rng(61);
  for (int n = 0; n < 20; ++n) {
    const auto x = random_at_infinity(rng, a2(), 3);
    CHECK(convention_swap(convention_swap(x)) == x);
  }
}

TEST_CASE("G1 action examples") {
  const auto v = gv({1, 2, -3}), w = gv({0, 1, 5});
  const IrregularTypeAtInfinity p1(a2(), 1, {w});
  const GaussianRational r(2, 1);
  CHECK(same_matrix(g1_act(AffineG1(q(7), r), p1).coefficient(1), scaled(w, r)));
  const IrregularTypeAtInfinity p2(a2(), 2, {w, v});
  CHECK(g1_act(AffineG1::identity(), p2) == p2);
  const auto moved = g1_act(AffineG1(q(1), q(1)), p2);
  CHECK(same_matrix(moved.coefficient(2), v));
  CHECK(same_matrix(moved.coefficient(1), GaussianVector(scaled(v, q(2)) + w)));
  CHECK_THROWS_AS(AffineG1(q(1), q(0)), Error);
}

TEST_CASE("G1 leading and subleading coefficients") {
  Rng rng(62);
  for (int n = 0; n < 50; ++n) {
    const int p = oracle::uniform(rng, 2, 5);
    const auto x = random_at_infinity(rng, a2(), p, 0.0);
    const auto g = random_g1(rng);
    const auto y = g1_act(g, x);
    CHECK(same_matrix(y.coefficient(p), scaled(x.coefficient(p), g.r.pow(p))));
    const GaussianVector sub = scaled(x.coefficient(p), GaussianRational(p) * g.r.pow(p - 1) * g.s) +
                               scaled(x.coefficient(p - 1), g.r.pow(p - 1));
    CHECK(same_matrix(y.coefficient(p - 1), sub));
  }
}

TEST_CASE("G1 right-action law and stratum preservation") {
  Rng rng(63);
  for (const char* label : {"A2", "B2", "G2"}) {
    const auto phi = build_root_system(label);
    for (int n = 0; n < 40; ++n) {
      const auto x = random_at_infinity(rng, phi, oracle::uniform(rng, 0, 4));
      const auto g = random_g1(rng), h = random_g1(rng);
      CHECK(g1_act(h, g1_act(g, x)) == g1_act(compose(g, h), x));
      CHECK(root_order_vector(g1_act(g, x)) == root_order_vector(x));
    }
  }
  const auto g = random_g1(rng);
  CHECK(compose(g, AffineG1::identity()) == g);
  CHECK(compose(AffineG1::identity(), g) == g);
}

TEST_CASE("G1 slice") {
  // alpha_1(A_1) = 0 already: s = 0.
  const IrregularTypeAtInfinity on(a2(), 2, {gv({1, 1, 0}), gv({3, 0, 0})});
  const auto s0 = g1_slice(on, 0);
  CHECK(s0.s.is_zero());
  CHECK(s0.sliced == on);
  // d_alpha = p: s agrees with -alpha(A_{p-1}) / (p alpha(A_p)).
  const IrregularTypeAtInfinity top(a2(), 3, {gv({0, 0, 0}), gv({2, 1, 0}), gv({4, 1, 0})});
  const auto st = g1_slice(top, 0);
  CHECK(st.s == q(-1, 3 * 3));
  // p = 3 with d_alpha = 2.
  const IrregularTypeAtInfinity low(a2(), 3, {gv({5, 0, 0}), gv({1, 0, 0}), gv({1, 1, 1})});
  REQUIRE(root_order(low, 0) == 2);
  const auto sl = g1_slice(low, 0);
  CHECK(pair(a2().root(0), sl.sliced.coefficient(1)).is_zero());
  CHECK(g1_slice(sl.sliced, 0).s.is_zero());
  try {
    g1_slice(IrregularTypeAtInfinity(a2(), 1, {gv({1, 0, 0})}), 0);
    FAIL("expected OrderTooLow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderTooLow);
  }
}

TEST_CASE("G1 slice post-condition and idempotence on random instances") {
  Rng rng(64);
  int checked = 0;
  for (int n = 0; n < 200; ++n) {
    const auto x = random_at_infinity(rng, a2(), oracle::uniform(rng, 2, 4));
    for (RootIndex a = 0; a < a2().size(); ++a) {
      const int d = root_order(x, a);
      if (d < 2) continue;
      const auto sl = g1_slice(x, a);
      CHECK(pair(a2().root(a), sl.sliced.coefficient(d - 1)).is_zero());
      CHECK(g1_slice(sl.sliced, a).s.is_zero());
      ++checked;
    }
  }
  CHECK(checked > 200);
}

TEST_CASE("G1 stabilizer orders") {
  const IrregularTypeAtInfinity cubic(a2(), 3, {gv({0, 0, 0}), gv({0, 0, 0}), gv({1, 0, 0})});
  CHECK(g1_stabilizer_order(cubic) == StabilizerOrder::finite(3));
  CHECK(oracle::g1_stabilizer_brute_force(cubic) == 3);
  const IrregularTypeAtInfinity mixed(a2(), 3, {gv({0, 0, 0}), gv({1, 1, 0}), gv({1, 0, 0})});
  CHECK(g1_stabilizer_order(mixed) == StabilizerOrder::finite(1));
  const IrregularTypeAtInfinity linear(a2(), 2, {gv({1, 2, 0}), gv({1, 1, 1})});
  CHECK(g1_stabilizer_order(linear).infinite);
  CHECK(g1_stabilizer_order(IrregularTypeAtInfinity::zero(a2(), 2)).infinite);
}

TEST_CASE("G1 stabilizers agree with the roots-of-unity oracle") {
  Rng rng(65);
  for (int n = 0; n < 120; ++n) {
    const int p = oracle::uniform(rng, 2, 6);
    // Sparse supports.
    std::vector<GaussianVector> a(static_cast<std::size_t>(p), GaussianVector::Zero(3));
    a[static_cast<std::size_t>(p - 1)] = oracle::random_vector(rng, 3, 3, 2);
    for (int j = 1; j < p; ++j)
      if (oracle::coin(rng, 0.3)) a[static_cast<std::size_t>(j - 1)] = oracle::random_vector(rng, 3, 3, 2);
    const IrregularTypeAtInfinity x(a2(), p, a);
    const auto mixed = g1_act(random_g1(rng), x);
    const auto got = g1_stabilizer_order(mixed);
    if (root_order_vector(mixed).max() <= 1) {
      CHECK(got.infinite);
      continue;
    }
    CHECK(got == StabilizerOrder::finite(oracle::g1_stabilizer_brute_force(mixed)));
  }
}

TEST_CASE("G2 action") {
  Rng rng(66);
  const IrregularPair pair{IrregularType(a2(), 1, {gv({2, 4, 0})}), IrregularTypeAtInfinity::zero(a2(), 1)};
  CHECK(g2_act(TorusG2(q(1)), pair) == pair);
  const auto halved = g2_act(TorusG2(q(2)), pair);
  CHECK(same_matrix(halved.at0.coefficient(1), gv({1, 2, 0})));
  CHECK_THROWS_AS(TorusG2(q(0)), Error);
  for (int n = 0; n < 40; ++n) {
    const IrregularPair x{convention_swap(random_at_infinity(rng, a2(), 2)), random_at_infinity(rng, a2(), 3)};
    const TorusG2 r1(oracle::nonzero_gaussian(rng, 3, 2)), r2(oracle::nonzero_gaussian(rng, 3, 2));
    CHECK(g2_act(r2, g2_act(r1, x)) == g2_act(TorusG2(r1.r * r2.r), x));
  }
}

TEST_CASE("G2 stabilizer orders") {
  const auto z0 = IrregularType::zero(a2(), 2);
  const IrregularPair even{z0, IrregularTypeAtInfinity(a2(), 4, {gv({0, 0, 0}), gv({1, 0, 0}), gv({0, 0, 0}), gv({1, 2, 0})})};
  CHECK(g2_stabilizer_order(even) == 2);
  CHECK(oracle::g2_stabilizer_brute_force(even) == 2);
  const IrregularPair one{IrregularType(a2(), 1, {gv({1, 0, 0})}), IrregularTypeAtInfinity::zero(a2(), 2)};
  CHECK(g2_stabilizer_order(one) == 1);
  const IrregularPair three{z0, IrregularTypeAtInfinity(a2(), 3, {gv({0, 0, 0}), gv({0, 0, 0}), gv({1, 0, 0})})};
  CHECK(g2_stabilizer_order(three) == 3);
  CHECK(oracle::g2_stabilizer_brute_force(three) == 3);
  try {
    g2_stabilizer_order({z0, IrregularTypeAtInfinity::zero(a2(), 2)});
    FAIL("expected ZeroPair");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroPair);
  }
}

TEST_CASE("G2 stabilizers agree with the roots-of-unity oracle") {
  Rng rng(67);
  for (int n = 0; n < 100; ++n) {
    auto sparse = [&](int p) {
      std::vector<GaussianVector> a(static_cast<std::size_t>(p), GaussianVector::Zero(3));
      for (auto& v : a)
        if (oracle::coin(rng, 0.35)) v = oracle::random_vector(rng, 3, 3, 2);
      return a;
    };
    const int p0 = oracle::uniform(rng, 0, 6), p1 = oracle::uniform(rng, 1, 6);
    const IrregularPair x{IrregularType(a2(), p0, sparse(p0)), IrregularTypeAtInfinity(a2(), p1, sparse(p1))};
    if (x.at0.is_zero() && x.atinf.is_zero()) continue;
    CHECK(g2_stabilizer_order(x) == oracle::g2_stabilizer_brute_force(x));
  }
}

TEST_CASE("weighted orbit equivalence") {
  Rng rng(68);
  const IrregularPair x{IrregularType(a2(), 2, {gv({1, 2, 0}), gv({0, 1, 1})}), IrregularTypeAtInfinity(a2(), 1, {gv({3, 0, 0})})};
  CHECK(weighted_orbit_equivalent(weighted_point(x), weighted_point(x)));
  CHECK(weighted_orbit_equivalent(weighted_point(x), weighted_point(g2_act(TorusG2(q(2)), x))));
  // Single weight 2: c = -1 is reached by r = i.
  const WeightedPoint a{{2}, {gv({1, 1, 0})}};
  CHECK(weighted_orbit_equivalent(a, WeightedPoint{{2}, {gv({-1, -1, 0})}}));
  CHECK(weighted_orbit_equivalent(a, WeightedPoint{{2}, {gv({1, 1, 0})}}));
  CHECK_FALSE(weighted_orbit_equivalent(a, WeightedPoint{{2}, {gv({1, 2, 0})}}));
  CHECK_FALSE(weighted_orbit_equivalent(a, WeightedPoint{{2}, {gv({0, 0, 0})}}));
  // Weights 2 and 4: r^2 = 1 forces r^4 = 1, so c_4 = -1 is unreachable.
  const WeightedPoint b{{2, 4}, {gv({1, 0, 0}), gv({0, 1, 0})}};
  CHECK_FALSE(weighted_orbit_equivalent(b, WeightedPoint{{2, 4}, {gv({1, 0, 0}), gv({0, -1, 0})}}));
  CHECK(weighted_orbit_equivalent(b, WeightedPoint{{2, 4}, {gv({-1, 0, 0}), gv({0, 1, 0})}}));
  CHECK(weighted_orbit_equivalent(b, WeightedPoint{{2, 4}, {gv({4, 0, 0}), gv({0, 16, 0})}}));
  CHECK_FALSE(weighted_orbit_equivalent(b, WeightedPoint{{2, 4}, {gv({4, 0, 0}), gv({0, -16, 0})}}));
  // Weight 0 must be fixed.
  CHECK_FALSE(weighted_orbit_equivalent(WeightedPoint{{0, 1}, {gv({1, 0, 0}), gv({1, 0, 0})}},
                                        WeightedPoint{{0, 1}, {gv({2, 0, 0}), gv({1, 0, 0})}}));
  CHECK_THROWS_AS(weighted_orbit_equivalent(a, b), Error);
  // Orbits of G1 through the slice.
  for (int n = 0; n < 40; ++n) {
    const auto y = random_at_infinity(rng, a2(), 3, 0.0);
    const auto alpha = static_cast<RootIndex>(0);
    if (root_order(y, alpha) < 2) continue;
    const auto moved = g1_act(random_g1(rng), y);
    CHECK(weighted_orbit_equivalent(weighted_point(g1_slice(y, alpha).sliced), weighted_point(g1_slice(moved, alpha).sliced)));
    const auto other = random_at_infinity(rng, a2(), 3, 0.0);
    if (root_order(other, alpha) < 2) continue;
    CHECK_FALSE(weighted_orbit_equivalent(weighted_point(g1_slice(y, alpha).sliced), weighted_point(g1_slice(other, alpha).sliced)));
  }
}

TEST_CASE("Deligne-Mumford criterion") {
  const auto a1 = build_root_system('A', 1);
  auto d = [&](int v) { return RootOrderVector(a1, {v, v}); };
  const auto v1 = dm_check(0, 1, {d(1)});
  CHECK(v1.relevant);
  CHECK_FALSE(v1.deligne_mumford);
  const auto v2 = dm_check(1, 1, {d(0)});
  CHECK(v2.relevant);
  CHECK(v2.deligne_mumford);
  CHECK_FALSE(dm_check(0, 2, {d(0), d(0)}).deligne_mumford);
  CHECK(dm_check(0, 2, {d(0), d(1)}).deligne_mumford);
  CHECK_FALSE(dm_check(0, 1, {RootOrderVector(a1, {1, 2})}).relevant);
  CHECK_THROWS_AS(dm_check(0, 2, {d(0)}), Error);
  CHECK_THROWS_AS(dm_check(-1, 1, {d(0)}), Error);
  CHECK_THROWS_AS(dm_check(0, 0, {}), Error);
  const auto a2x = build_root_system('A', 2);
  CHECK_FALSE(dm_check(1, 1, {RootOrderVector(a2x, {0, 0, 1, 0, 0, 1})}).relevant);
}

TEST_CASE("phi_n and its inverse") {
  const GaussianVector b = (GaussianVector(3) << q(-4, 3), q(-1, 3), q(5, 3)).finished();
  CHECK(same_matrix(phi_n(b), gv({1, 3})));
  CHECK(same_matrix(phi_n_inverse(gv({5})), (GaussianVector(2) << q(-5, 2), q(5, 2)).finished()));
  Rng rng(69);
  for (int n = 0; n < 50; ++n) {
    const int size = oracle::uniform(rng, 1, 4);
    GaussianVector x;
    do x = oracle::random_vector(rng, size, 5, 3);
    while ([&] {
      for (int i = 0; i < size; ++i) {
        if (x(i).is_zero()) return true;
        for (int j = i + 1; j < size; ++j)
          if (x(i) == x(j)) return true;
      }
      return false;
    }());
    const GaussianVector bb = phi_n_inverse(x);
    CHECK(same_matrix(phi_n(bb), x));
    CHECK(same_matrix(phi_n_inverse(phi_n(bb)), bb));
  }
  auto code_of = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Unsupported;
  };
  CHECK(code_of([] { phi_n(gv({1, 1, -2})); }) == ErrorCode::NotRegular);
  CHECK(code_of([] { phi_n(gv({1, 2})); }) == ErrorCode::NotRegular);
  CHECK(code_of([] { phi_n_inverse(gv({0, 1})); }) == ErrorCode::NotInXn);
  CHECK(code_of([] { phi_n_inverse(gv({2, 2})); }) == ErrorCode::NotInXn);
}

TEST_CASE("exchange map") {
  // n = m = 1.
  const ExchangePoint point{(GaussianVector(2) << q(-1), q(1)).finished(), gv({4})};
  const ExchangePoint image = exchange_map(point);
  CHECK(same_matrix(image.first, gv({2})));
  CHECK(same_matrix(image.second, gv({-2, 2})));
  CHECK(exchange_map_inverse(image) == point);
  const ExchangePoint two{(GaussianVector(3) << q(-1), q(0), q(1)).finished(), gv({1, 3})};
  const GaussianRational inv_alpha = q(1, 2);
  CHECK(exchange_map(scale(two, inv_alpha)) == scale(exchange_map(two), inv_alpha));
  CHECK(exchange_map_inverse(exchange_map(two)) == two);
}

TEST_CASE("SL2(Z) action") {
  const SL2ZPoint x{UpperHalfPoint(GaussianRational::i()), {gv({1, -1, 0})}};
  CHECK(sl2z_act(SL2ZElement::identity(), x) == x);
  const SL2ZPoint sx = sl2z_act(SL2ZElement(0, -1, 1, 0), x);
  CHECK(sx.tau.tau == GaussianRational::i());
  CHECK(same_matrix(sx.coefficients[0], scaled(gv({1, -1, 0}), -GaussianRational::i())));
  CHECK_THROWS_AS(SL2ZElement(1, 1, 1, 1), Error);
  CHECK_THROWS_AS(UpperHalfPoint(q(1)), Error);
  try {
    UpperHalfPoint(GaussianRational(Rational(0), Rational(-1)));
    FAIL("expected NotInUpperHalfPlane");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInUpperHalfPlane);
  }
}

TEST_CASE("SL2(Z) group law and upper half plane") {
  Rng rng(70);
  auto random_element = [&] {
    while (true) {
      const long a = oracle::uniform(rng, -4, 4), b = oracle::uniform(rng, -4, 4), c = oracle::uniform(rng, -4, 4);
      if (a == 0) continue;
      if ((1 + b * c) % a != 0) continue;
      return SL2ZElement(a, b, c, (1 + b * c) / a);
    }
  };
  for (int n = 0; n < 60; ++n) {
    const SL2ZElement g = random_element(), h = random_element();
    const GaussianRational tau(oracle::small_rational(rng, 5, 4), Rational(mpz_class(oracle::uniform(rng, 1, 6)), mpz_class(oracle::uniform(rng, 1, 4))));
    std::vector<GaussianVector> a;
    for (int j = 0; j < oracle::uniform(rng, 1, 3); ++j) a.push_back(oracle::random_vector(rng, 2));
    const SL2ZPoint x{UpperHalfPoint(tau), a};
    CHECK(sl2z_act(g, sl2z_act(h, x)) == sl2z_act(g * h, x));
    CHECK(sl2z_act(g, x).tau.tau.im().sign() > 0);
  }
}
