#include <doctest.h>

#include "support/oracles.hpp"

using namespace irrstrat;

namespace {

RootIndex find_root(const RootSystem& phi, std::vector<long> coords) {
  for (RootIndex i = 0; i < phi.size(); ++i) {
    bool same = true;
    for (std::size_t k = 0; k < coords.size(); ++k) same = same && phi.root(i)(static_cast<Eigen::Index>(k)) == Rational(coords[k]);
    if (same) return i;
  }
  FAIL("root not found");
  return 0;
}

RationalVector vec(std::vector<long> c) {
  RationalVector v(static_cast<Eigen::Index>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) v(static_cast<Eigen::Index>(i)) = Rational(c[i]);
  return v;
}

}  // namespace

TEST_CASE("standard realizations have the classical counts") {
  CHECK(build_root_system('A', 1).size() == 2);
  CHECK(build_root_system('A', 1).rank() == 2);
  CHECK(build_root_system('A', 2).size() == 6);
  CHECK(build_root_system('A', 3).size() == 12);
  CHECK(build_root_system('B', 2).size() == 8);
  CHECK(build_root_system('B', 3).size() == 18);
  CHECK(build_root_system('C', 3).size() == 18);
  CHECK(build_root_system('D', 4).size() == 24);
  CHECK(build_root_system('G', 2).size() == 12);
  CHECK(build_root_system("B2").family() == std::optional<std::string>("B2"));
  CHECK_THROWS_AS(build_root_system('B', 1), Error);
  CHECK_THROWS_AS(build_root_system('E', 6), Error);
  CHECK_THROWS_AS(build_root_system("A0"), Error);
  CHECK_THROWS_AS(build_root_system("Q7"), Error);
}

TEST_CASE("A1 and B2 root sets") {
  const auto a1 = build_root_system('A', 1);
  CHECK(same_matrix(a1.root(0), vec({1, -1})));
  CHECK(same_matrix(a1.root(1), vec({-1, 1})));
  const auto b2 = build_root_system('B', 2);
  for (auto c : std::vector<std::vector<long>>{{1, 0}, {0, 1}, {1, 1}, {1, -1}}) {
    find_root(b2, c);
    std::vector<long> neg;
    for (long x : c) neg.push_back(-x);
    find_root(b2, neg);
  }
}

TEST_CASE("A2 indexing: simple roots first, negatives after positives") {
  const auto a2 = build_root_system('A', 2);
  CHECK(same_matrix(a2.root(0), vec({1, -1, 0})));
  CHECK(same_matrix(a2.root(1), vec({0, 1, -1})));
  CHECK(same_matrix(a2.root(2), vec({1, 0, -1})));
  for (RootIndex i = 0; i < 3; ++i) CHECK(a2.negation(i) == i + 3);
}

TEST_CASE("root system invariants for every standard type") {
  for (const char* label : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D2", "D3", "D4", "G2"}) {
    const auto phi = build_root_system(label);
    for (RootIndex i = 0; i < phi.size(); ++i) {
      CHECK(phi.negation(phi.negation(i)) == i);
      CHECK(same_matrix(phi.root(phi.negation(i)), RationalVector(-phi.root(i))));
      CHECK_FALSE(is_zero(phi.root(i)));
      for (RootIndex j = i + 1; j < phi.size(); ++j) CHECK_FALSE(same_matrix(phi.root(i), phi.root(j)));
    }
  }
}

TEST_CASE("invalid root systems are rejected") {
  CHECK_THROWS_AS(RootSystem(2, {vec({1, 0})}), Error);                                     // not closed under negation
  CHECK_THROWS_AS(RootSystem(2, {vec({0, 0}), vec({0, 0})}), Error);                        // zero vector
  CHECK_THROWS_AS(RootSystem(2, {vec({1, 0}), vec({-1, 0}), vec({1, 0})}), Error);          // duplicate
  CHECK_THROWS_AS(RootSystem(3, {vec({1, 0}), vec({-1, 0})}), Error);                       // wrong length
  CHECK_THROWS_AS(RootSystem(0, {}), Error);
  try {
    RootSystem(2, {vec({1, 0})});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidRootSystem);
  }
}

TEST_CASE("span closure examples") {
  const auto a2 = build_root_system('A', 2);
  CHECK(span_closure(a2, {}).empty());
  CHECK(span_closure(a2, {0}) == RootSet{0, 3});
  CHECK(span_closure(a2, {0, 1}).size() == 6);
  CHECK(is_span_closed(a2, {0, 3}));
  CHECK_FALSE(is_span_closed(a2, {0, 1, 3, 4}));
  CHECK_THROWS_AS(LeviSubsystem(a2, {0, 1, 3, 4}), Error);
}

TEST_CASE("span closure is idempotent, monotone and matches the rank oracle") {
  oracle::Rng rng(21);
  for (const char* label : {"A2", "A3", "B2", "B3", "C3", "G2", "D4"}) {
    const auto phi = build_root_system(label);
    for (int n = 0; n < 40; ++n) {
      RootSet s;
      for (RootIndex i = 0; i < phi.size(); ++i)
        if (oracle::coin(rng, 0.15)) s.push_back(i);
      RootSet t = s;
      for (RootIndex i = 0; i < phi.size(); ++i)
        if (oracle::coin(rng, 0.1) && !std::binary_search(s.begin(), s.end(), i)) t.push_back(i);
      std::sort(t.begin(), t.end());
      const RootSet cs = span_closure(phi, s), ct = span_closure(phi, t);
      CHECK(cs == oracle::closure(phi, s));
      CHECK(span_closure(phi, cs) == cs);
      CHECK(std::includes(cs.begin(), cs.end(), s.begin(), s.end()));
      CHECK(std::includes(ct.begin(), ct.end(), cs.begin(), cs.end()));
      for (RootIndex a : cs) CHECK(std::binary_search(cs.begin(), cs.end(), phi.negation(a)));
    }
  }
}

TEST_CASE("enumerate_levi counts agree with brute-force closure of all subsets") {
  for (auto [label, count] : std::vector<std::pair<const char*, std::size_t>>{{"A1", 2}, {"A2", 5}, {"B2", 6}, {"G2", 8}}) {
    const auto phi = build_root_system(label);
    const auto levi = enumerate_levi(phi);
    CHECK(levi.size() == count);
    std::set<std::vector<RootIndex>> got;
    for (const auto& l : levi) got.insert(l.members());
    CHECK(got == oracle::all_closures(phi));
  }
}

TEST_CASE("enumerate_levi order, closure and intersections") {
  for (const char* label : {"A3", "B3", "C3"}) {
    const auto phi = build_root_system(label);
    const auto levi = enumerate_levi(phi);
    CHECK(levi.front().members().empty());
    CHECK(levi.back().is_everything());
    for (std::size_t i = 0; i + 1 < levi.size(); ++i) {
      const auto& a = levi[i].members();
      const auto& b = levi[i + 1].members();
      CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
    }
    std::set<RootSet> members;
    for (const auto& l : levi) {
      CHECK(is_span_closed(phi, l.members()));
      members.insert(l.members());
    }
    // Intersections of Levi subsystems are Levi subsystems.
    for (const auto& x : levi)
      for (const auto& y : levi) {
        RootSet both;
        std::set_intersection(x.members().begin(), x.members().end(), y.members().begin(), y.members().end(),
                              std::back_inserter(both));
        CHECK(members.count(span_closure(phi, both)) == 1);
        CHECK(is_span_closed(phi, both));
      }
  }
}

TEST_CASE("enumeration guard") {
  std::vector<RationalVector> roots;
  for (int i = 1; i <= 31; ++i) {
    roots.push_back(vec({i, 1}));
    roots.push_back(vec({-i, -1}));
  }
  const RootSystem big(2, roots);
  try {
    enumerate_levi(big);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
  CHECK_NOTHROW(enumerate_levi(build_root_system('D', 4)));
}

TEST_CASE("kernel intersection dimension") {
  const auto a2 = build_root_system('A', 2);
  CHECK(kernel_intersection_dim(a2, {}) == 3);
  CHECK(kernel_intersection_dim(build_root_system('A', 1), {0}) == 1);
  const auto b2 = build_root_system('B', 2);
  CHECK(kernel_intersection_dim(b2, {find_root(b2, {1, 0}), find_root(b2, {1, 1})}) == 0);
  oracle::Rng rng(22);
  for (const char* label : {"A3", "B3", "G2"}) {
    const auto phi = build_root_system(label);
    for (int n = 0; n < 30; ++n) {
      RootSet s;
      for (RootIndex i = 0; i < phi.size(); ++i)
        if (oracle::coin(rng, 0.2)) s.push_back(i);
      CHECK(kernel_intersection_dim(phi, s) + oracle::subset_rank(phi, s) == phi.rank());
      const RationalMatrix k = kernel_basis(phi, s);
      CHECK(k.cols() == kernel_intersection_dim(phi, s));
      for (RootIndex a : s) CHECK(is_zero(phi.root(a).transpose() * k));
      for (Eigen::Index c = 0; c < k.cols(); ++c)
        for (Eigen::Index r = 0; r < k.rows(); ++r) CHECK(k(r, c).is_integer());
    }
  }
}

TEST_CASE("roots that do not span the ambient space") {
  const auto g2 = build_root_system('G', 2);
  CHECK(g2.rank() == 3);
  CHECK(kernel_intersection_dim(g2, span_closure(g2, {0, 1})) == 1);
  const auto gl3 = general_linear_roots(3);
  CHECK(gl3.rank() == 3);
  CHECK(gl3.size() == 6);
  const auto gl1 = general_linear_roots(1);
  CHECK(gl1.size() == 0);
  CHECK(enumerate_levi(gl1).size() == 1);
  CHECK(kernel_intersection_dim(gl1, {}) == 1);
  // A rank-3 ambient space carrying only an A1 system.
  const RootSystem thin(3, {vec({1, -1, 0}), vec({-1, 1, 0})});
  CHECK(enumerate_levi(thin).size() == 2);
  CHECK(kernel_intersection_dim(thin, {0, 1}) == 2);
}

TEST_CASE("Levi filtrations") {
  const auto a2 = build_root_system('A', 2);
  const LeviSubsystem line(a2, {0, 3}), all(a2, {0, 1, 2, 3, 4, 5}), none(a2, {});
  const LeviFiltration f(a2, {none, line, all});
  CHECK(f.length() == 3);
  CHECK(f.depth() == 2);
  CHECK(f.level(4).size() == 6);
  CHECK(LeviFiltration(a2, {all, all}).depth() == 0);
  CHECK(LeviFiltration(a2, {none, none}).depth() == 2);
  CHECK_THROWS_AS(LeviFiltration(a2, {line, none}), Error);
}
