#include "support.hpp"

#include "wkl/oracle.hpp"

#include <doctest.h>

using namespace wkl;
using wkl::testing::elt;
using wkl::testing::group_of;
using wkl::testing::root;
using wkl::testing::weight;

TEST_CASE("group orders and longest lengths") {
  struct Row {
    char t;
    int n;
    int order;
    int top;
  };
  for (const Row& r : {Row{'A', 1, 2, 1}, Row{'A', 3, 24, 6}, Row{'B', 2, 8, 4}, Row{'G', 2, 12, 6},
                       Row{'B', 3, 48, 9}, Row{'D', 4, 192, 12}, Row{'F', 4, 1152, 24}}) {
    const auto g = group_of(r.t, r.n);
    CAPTURE(g->roots().name());
    CHECK(g->size() == r.order);
    CHECK(g->length(g->longest()) == r.top);
  }
}

TEST_CASE("element tables are consistent") {
  const auto g = group_of('B', 3);
  const RootSystem& rs = g->roots();
  for (int w = 0; w < g->size(); ++w) {
    CHECK(g->length(w) == static_cast<int>(g->word(w).size()));
    CHECK(g->length(w) == static_cast<int>(g->inversion_set(w).size()));
    CHECK(g->from_word(g->word(w)) == w);
    CHECK(g->multiply(w, g->inverse(w)) == 0);
    for (int r = 0; r < rs.num_roots(); ++r) CHECK(g->act_on_root(w, rs.negate(r)) == rs.negate(g->act_on_root(w, r)));
  }
  for (int v = 0; v < g->size(); v += 5)
    for (int w = 0; w < g->size(); w += 3)
      for (int r = 0; r < rs.num_roots(); ++r)
        CHECK(g->act_on_root(g->multiply(v, w), r) == g->act_on_root(v, g->act_on_root(w, r)));
}

TEST_CASE("ids are sorted by length") {
  const auto g = group_of('A', 3);
  for (int w = 1; w < g->size(); ++w) CHECK(g->length(w - 1) <= g->length(w));
  CHECK(g->identity() == 0);
  CHECK(g->word_string(0) == "1");
  CHECK(g->word_string(elt(*g, {2, 1})) == "s_γ s_β");
}

TEST_CASE("reflections") {
  const auto g = group_of('A', 3);
  const RootSystem& rs = g->roots();
  const int ab = root(rs, {1, 1, 0});
  CHECK(g->reflection(ab) == elt(*g, {0, 1, 0}));
  CHECK(g->reflection(rs.negate(ab)) == g->reflection(ab));
  for (int r = 0; r < rs.num_positive(); ++r) CHECK(g->multiply(g->reflection(r), g->reflection(r)) == 0);
}

TEST_CASE("action on weights") {
  const auto g = group_of('A', 3);
  const RootSystem& rs = g->roots();
  const Weight lam = weight("-5-4*t1, -5+4*t1, -5");
  CHECK(g->act_on_weight(0, lam) == lam);
  const Weight sl = g->act_on_weight(g->reflection(0), lam);
  CHECK(sl.coord(0).constant == 5);
  CHECK(sl.coord(0).transcendental == std::vector<Rational>{4});
  CHECK(g->act_on_weight(g->longest(), weight("-1,-1,-1")) == rs.rho());
  // r^vee(w lambda) = (w^-1 r)^vee(lambda).
  for (int w = 0; w < g->size(); ++w)
    for (int r = 0; r < rs.num_roots(); ++r)
      CHECK(rs.pair(r, g->act_on_weight(w, lam)) == rs.pair(g->act_on_root(g->inverse(w), r), lam));
}

TEST_CASE("Bruhat order basics") {
  const auto g = group_of('A', 3);
  for (int w = 0; w < g->size(); ++w) CHECK(g->bruhat_leq(0, w));
  CHECK(g->bruhat_leq(elt(*g, {1}), elt(*g, {0, 1, 0})));
  CHECK_FALSE(g->bruhat_leq(elt(*g, {0}), elt(*g, {1, 2})));
  for (int v = 0; v < g->size(); ++v)
    for (int w = 0; w < g->size(); ++w)
      if (g->length(v) > g->length(w)) CHECK_FALSE(g->bruhat_leq(v, w));
}

TEST_CASE("Bruhat order agrees with subwords") {
  for (auto [t, n] : {std::pair{'B', 2}, std::pair{'A', 3}, std::pair{'G', 2}}) {
    const auto g = group_of(t, n);
    for (int v = 0; v < g->size(); ++v)
      for (int w = 0; w < g->size(); ++w) CHECK(g->bruhat_leq(v, w) == bruhat_subword(*g, v, w));
  }
}

TEST_CASE("inversion sets and descents") {
  const auto g = group_of('A', 3);
  const RootSystem& rs = g->roots();
  CHECK(g->inversion_set(0).empty());
  CHECK(g->descents_right(0).empty());
  CHECK(g->inversion_set(elt(*g, {2, 1})) == std::vector<int>{1, root(rs, {0, 1, 1})});
  CHECK(g->descents_right(g->longest()) == std::vector<int>{0, 1, 2});
  CHECK(static_cast<int>(g->inversion_set(g->longest()).size()) == rs.num_positive());
}

TEST_CASE("longest elements of parabolic subgroups") {
  const auto g = group_of('A', 3);
  CHECK(g->longest_element_of_parabolic(std::vector<int>{}) == 0);
  const std::vector<int> ab{0, 1};
  CHECK(g->longest_element_of_parabolic(ab) == elt(*g, {0, 1, 0}));
  const std::vector<int> all{0, 1, 2};
  CHECK(g->longest_element_of_parabolic(all) == g->longest());
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(WeylGroup(std::make_shared<const RootSystem>(RootSystem::build('B', 3)), 40), std::length_error);
}
