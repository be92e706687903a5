#include "support.hpp"

#include "wkl/hecke_module.hpp"

#include <doctest.h>

using namespace wkl;
using namespace wkl::testing;

namespace {

const LaurentPoly q = LaurentPoly::q();
const LaurentPoly qi = LaurentPoly::monomial(1, -1);

struct A3Fixture {
  std::shared_ptr<const ThetaCosets> tc = cosets_of('A', 3, {0, 1});
  const WeylGroup& g = tc->group();
  IntegralData idata = integral_data(*tc, weight("-5-4*t1, -5+4*t1, -5"));
  std::vector<IntegralModel> models = build_all_models(*tc, idata);
  int c_theta = tc->identity_coset();
  int c_g = tc->coset_of(elt(g, {0, 1, 0, 2}));
  int c_gb = tc->coset_of(elt(g, {2, 1}));
  int c_top = tc->coset_of(g.longest());
  int ab = root(g.roots(), {1, 1, 0});

  HeckeElt delta(int c) const { return HeckeElt::delta(tc->tag(), c); }
};

}  // namespace

TEST_CASE("element arithmetic") {
  const SpaceTag a = next_space_tag();
  const SpaceTag b = next_space_tag();
  HeckeElt x = HeckeElt::delta(a, 0) + q * HeckeElt::delta(a, 2);
  CHECK(x.coeff(2) == q);
  CHECK(x.coeff(1).is_zero());
  x -= q * HeckeElt::delta(a, 2);
  CHECK(x == HeckeElt::delta(a, 0));
  CHECK(x.coeffs().size() == 1);
  CHECK((x - x).is_zero());
  CHECK_THROWS_AS(x + HeckeElt::delta(b, 0), SpaceMismatch);
  CHECK((q * HeckeElt::delta(a, 1)).to_string([](int c) { return "C" + std::to_string(c); }) == "q*δ[C1]");
}

TEST_CASE_FIXTURE(A3Fixture, "the three cases of T_alpha") {
  CHECK(t_alpha(*tc, 2, delta(c_theta)) == q * delta(c_theta) + delta(c_g));
  CHECK(t_alpha(*tc, 0, delta(c_theta)).is_zero());
  CHECK(t_alpha(*tc, 1, delta(c_gb)) == qi * delta(c_gb) + delta(c_g));
}

TEST_CASE_FIXTURE(A3Fixture, "quadratic relation") {
  for (int c = 0; c < tc->size(); ++c)
    for (int i = 0; i < 3; ++i) {
      const HeckeElt once = t_alpha(*tc, i, delta(c));
      CHECK(t_alpha(*tc, i, once) == (q + qi) * once);
    }
}

TEST_CASE("braid relations on the Verma module of B2") {
  // H_s = T_s - q acts by the standard basis of the Hecke algebra.
  const auto tc = cosets_of('B', 2, {});
  auto h = [&](int i, const HeckeElt& x) { return t_alpha(*tc, i, x) - q * x; };
  for (int c = 0; c < tc->size(); ++c) {
    HeckeElt x = HeckeElt::delta(tc->tag(), c), y = x;
    for (int k = 0; k < 4; ++k) {
      x = h(k % 2, x);
      y = h((k + 1) % 2, y);
    }
    CHECK(x == y);
    CHECK(h(0, h(0, x)) == x + (qi - q) * h(0, x));
  }
}

TEST_CASE_FIXTURE(A3Fixture, "right multiplication") {
  CHECK(right_mult_simple(*tc, delta(c_theta), 0) == delta(c_theta));
  CHECK(right_mult_simple(*tc, delta(c_gb), 1) == delta(c_g));
  for (int c = 0; c < tc->size(); ++c)
    for (int i = 0; i < 3; ++i) {
      const HeckeElt x = q * delta(c) + delta(c_top);
      CHECK(right_mult_simple(*tc, right_mult_simple(*tc, x, i), i) == x);
    }
}

TEST_CASE_FIXTURE(A3Fixture, "model operators") {
  const IntegralModel& m = models[0];
  const HeckeElt base = HeckeElt::delta(m.tag(), m.identity_coset());
  CHECK(t_alpha_model(m, ab, base).is_zero());
  const int e = m.coset_of(g.multiply(g.reflection(ab), g.reflection(2)));
  CHECK(t_alpha_model(m, 2, base) == q * base + HeckeElt::delta(m.tag(), e));
  const IntegralModel& single = models[1];
  for (int alpha : idata.pi_lambda) CHECK(t_alpha_model(single, alpha, HeckeElt::delta(single.tag(), 0)).is_zero());
  CHECK_THROWS(t_alpha_model(m, 0, base));
  CHECK_THROWS_AS(t_alpha_model(m, 2, delta(c_theta)), SpaceMismatch);
}

TEST_CASE_FIXTURE(A3Fixture, "restriction and induction") {
  std::vector<HeckeElt> parts = restrict_lambda(*tc, idata, models, delta(c_top));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == HeckeElt::delta(models[0].tag(), models[0].coset_of(g.reflection(root(g.roots(), {1, 1, 1})))));
  CHECK(parts[1].is_zero());
  parts = restrict_lambda(*tc, idata, models, delta(c_gb));
  CHECK(parts[0].is_zero());
  CHECK(parts[1] == HeckeElt::delta(models[1].tag(), 0));
  for (const HeckeElt& p : restrict_lambda(*tc, idata, models, HeckeElt(tc->tag()))) CHECK(p.is_zero());

  const HeckeElt x = q * delta(c_theta) + delta(c_g) - qi * delta(c_gb) + delta(c_top);
  parts = restrict_lambda(*tc, idata, models, x);
  HeckeElt sum(tc->tag());
  for (std::size_t k = 0; k < models.size(); ++k) sum += induce(*tc, models[k], parts[k]);
  CHECK(sum == x);
}

TEST_CASE_FIXTURE(A3Fixture, "conjugation intertwines model operators") {
  for (const IntegralModel& m : models) {
    const ConjugatedModel cm = conjugate_model(*tc, m, 0);
    for (int e = 0; e < m.size(); ++e) {
      const HeckeElt y = HeckeElt::delta(m.tag(), e);
      for (int alpha : idata.pi_lambda) {
        const int moved = g.act_on_root(g.reflection(0), alpha);
        CHECK(conjugate(m, cm, t_alpha_model(m, alpha, y)) == t_alpha_model(cm.model, moved, conjugate(m, cm, y)));
      }
    }
  }
}
