#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace wkl;
using wkl::testing::weight;

TEST_CASE("root counts per type") {
  CHECK(RootSystem::build('A', 1).num_roots() == 2);
  CHECK(RootSystem::build('A', 3).num_positive() == 6);
  CHECK(RootSystem::build('B', 3).num_positive() == 9);
  CHECK(RootSystem::build('C', 3).num_positive() == 9);
  CHECK(RootSystem::build('D', 4).num_positive() == 12);
  CHECK(RootSystem::build('G', 2).num_roots() == 12);
  CHECK(RootSystem::build('F', 4).num_positive() == 24);
  CHECK(RootSystem::build('E', 6).num_positive() == 36);
}

TEST_CASE("A3 positive roots by name") {
  const RootSystem rs = RootSystem::build('A', 3);
  std::set<std::string> names;
  for (int r = 0; r < rs.num_positive(); ++r) names.insert(rs.root_name(r));
  CHECK(names == std::set<std::string>{"α", "β", "γ", "α+β", "β+γ", "α+β+γ"});
  for (int i = 0; i < 3; ++i) CHECK(rs.root_name(i) == RootSystem::simple_name(i));
}

TEST_CASE("root table structure") {
  for (char t : {'A', 'B', 'C', 'G'}) {
    const int rank = t == 'G' ? 2 : 3;
    const RootSystem rs = RootSystem::build(t, rank);
    CAPTURE(rs.name());
    CHECK(rs.num_roots() == 2 * rs.num_positive());
    for (int r = 0; r < rs.num_roots(); ++r) {
      const auto& c = rs.root(r);
      bool nonneg = true;
      for (int x : c) nonneg = nonneg && x >= 0;
      CHECK(nonneg == rs.is_positive(r));
      std::vector<int> neg;
      for (int x : c) neg.push_back(-x);
      CHECK(rs.find_root(neg) == rs.negate(r));
    }
    for (int i = 0; i < rank; ++i) {
      CHECK(rs.cartan()[i][i] == 2);
      for (int j = 0; j < rank; ++j)
        if (i != j) CHECK((rs.cartan()[i][j] <= 0 && rs.cartan()[i][j] >= -3));
      std::vector<int> e(rank, 0);
      e[i] = 1;
      CHECK(rs.coroot(i) == e);
    }
  }
}

TEST_CASE("reflections permute roots") {
  const RootSystem rs = RootSystem::build('B', 3);
  for (int r = 0; r < rs.num_roots(); ++r) {
    CHECK(rs.reflect(r, r) == rs.negate(r));
    for (int x = 0; x < rs.num_roots(); ++x) CHECK(rs.reflect(r, rs.reflect(r, x)) == x);
  }
}

TEST_CASE("unsupported types are rejected") {
  CHECK_THROWS_AS(RootSystem::build('G', 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('E', 9), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('Q', 2), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('A', 7), std::invalid_argument);
}

TEST_CASE("pairings with the mixed A3 weight") {
  const RootSystem rs = RootSystem::build('A', 3);
  const Weight lam = weight("-5-4*t1, -5+4*t1, -5");
  const Pairing pa = rs.pair(0, lam);
  CHECK(pa.constant == -5);
  CHECK(pa.transcendental == std::vector<Rational>{-4});
  CHECK(classify(pa).kind == Integrality::Irrational);
  const Classification cg = classify(rs.pair(2, lam));
  CHECK(cg.is_integer());
  CHECK(cg.value == -5);
  // alpha+beta pairs to -10 with the transcendental parts cancelling.
  const Classification cab = classify(rs.pair(rs.find_root({1, 1, 0}).value(), lam));
  CHECK(cab.is_integer());
  CHECK(cab.value == -10);
}

TEST_CASE("classification of pairings") {
  CHECK(classify(Pairing(Rational(-5), {0})).is_integer());
  CHECK(classify(Pairing(Rational(1, 2), {0})).kind == Integrality::RationalNonInteger);
  CHECK(classify(Pairing(Rational(-5), {Rational(-4)})).kind == Integrality::Irrational);
  const RootSystem rs = RootSystem::build('B', 2);
  const Weight zero = weight("0,0");
  for (int r = 0; r < rs.num_roots(); ++r) CHECK(rs.pair(r, zero).is_zero());
}

TEST_CASE("weight flags") {
  const RootSystem a3 = RootSystem::build('A', 3);
  WeightFlags f = a3.weight_flags(weight("-5-4*t1, -5+4*t1, -5"));
  CHECK(f.antidominant);
  CHECK(f.regular);
  CHECK_FALSE(f.integral);
  f = a3.weight_flags(weight("-1,-1,-1"));
  CHECK(f.antidominant);
  CHECK(f.regular);
  CHECK(f.integral);
  f = a3.weight_flags(weight("0,0,0"));
  CHECK_FALSE(f.antidominant);
  CHECK_FALSE(f.regular);
  CHECK(f.integral);
  // Singular weights are antidominant only in the relaxed sense.
  const RootSystem a2 = RootSystem::build('A', 2);
  CHECK(a2.antidominance_violation(weight("0,-1")).has_value());
  CHECK_FALSE(a2.antidominance_violation(weight("0,-1"), true).has_value());
  CHECK(a2.antidominance_violation(weight("1,-3"), true) == 0);
}

TEST_CASE("rho and the root lattice") {
  const RootSystem rs = RootSystem::build('A', 2);
  const Weight rho = rs.rho();
  for (int i = 0; i < 2; ++i) CHECK(classify(rs.pair(i, rho)).value == 1);
  CHECK(rs.in_root_lattice(weight("2,-1")));
  CHECK(rs.in_root_lattice(weight("1,1")));
  CHECK_FALSE(rs.in_root_lattice(weight("1,0")));
  CHECK_FALSE(rs.in_root_lattice(weight("1/2,0")));
}

TEST_CASE("weights compare exactly") {
  CHECK(weight("1/2, t1") == weight("2/4, 1*t1"));
  CHECK_FALSE(weight("1/2, t1") == weight("1/2, t2"));
  CHECK(weight("-5-4*t1, -5+4*t1, -5").to_string() == "-5-4*t1, -5+4*t1, -5");
}
