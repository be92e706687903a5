#include "support.hpp"

#include "wkl/char_formula.hpp"
#include "wkl/oracle.hpp"

#include <doctest.h>

#include <map>

using namespace wkl;
using namespace wkl::testing;

namespace {

using Row = std::vector<std::pair<int, std::int64_t>>;

Row entries(const CharacterFormula& cf, int c) {
  const FormulaRow* row = cf.row_for(c);
  REQUIRE(row != nullptr);
  Row out;
  for (const auto& e : row->entries) out.emplace_back(e.standard.coset, e.coeff);
  return out;
}

struct A3Fixture {
  std::shared_ptr<const ThetaCosets> tc = cosets_of('A', 3, {0, 1});
  const WeylGroup& g = tc->group();
  KLTable kl = compute_kl(tc, weight("-5-4*t1, -5+4*t1, -5"));
  CharacterFormula cf = regular_formula(kl);
  int c_theta = tc->identity_coset();
  int c_g = tc->coset_of(elt(g, {0, 1, 0, 2}));
  int c_gb = tc->coset_of(elt(g, {2, 1}));
  int c_top = tc->coset_of(g.longest());
};

}  // namespace

TEST_CASE_FIXTURE(A3Fixture, "character rows of the mixed A3 weight") {
  CHECK(cf.rows.size() == 4);
  CHECK(entries(cf, c_theta) == Row{{c_theta, 1}});
  CHECK(entries(cf, c_gb) == Row{{c_gb, 1}});
  CHECK(entries(cf, c_g) == Row{{c_theta, -1}, {c_g, 1}});
  CHECK(entries(cf, c_top) == Row{{c_g, -1}, {c_top, 1}});
  CHECK(cf.row_for(c_top)->irreducible.element == g.longest());
}

TEST_CASE_FIXTURE(A3Fixture, "multiplicities invert the character matrix") {
  const MultiplicityMatrix mm = invert_multiplicities(cf);
  const int n = static_cast<int>(mm.labels.size());
  std::map<int, int> at;
  for (int i = 0; i < n; ++i) at[mm.labels[i].coset] = i;
  auto m = [&](int c, int d) { return mm.m[at[c]][at[d]]; };
  CHECK(m(c_top, c_theta) == 1);
  CHECK(m(c_top, c_g) == 1);
  CHECK(m(c_top, c_top) == 1);
  CHECK(m(c_g, c_theta) == 1);
  CHECK(m(c_gb, c_gb) == 1);
  CHECK(m(c_gb, c_theta) == 0);
  // [M : L] times the character matrix is the identity.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < n; ++k)
        for (const auto& e : cf.rows[k].entries)
          if (e.standard.coset == mm.labels[j].coset) s += mm.m[i][k] * e.coeff;
      CHECK(s == (i == j ? 1 : 0));
    }
}

TEST_CASE("singular formula with a regular weight") {
  for (const CatalogType& t : weight_catalog()) {
    if (t.rank > 3) continue;
    for (const std::string& w : t.weights) {
      const auto tc = cosets_of(t.letter, t.rank, {0});
      const KLTable kl = compute_kl(tc, weight(w));
      const CharacterFormula reg = regular_formula(kl);
      const CharacterFormula sing = singular_formula(kl, stabilizer_data(*tc, weight(w)));
      REQUIRE(reg.rows.size() == sing.rows.size());
      for (const FormulaRow& row : reg.rows) CHECK(entries(sing, row.irreducible.coset) == entries(reg, row.irreducible.coset));
    }
  }
}

TEST_CASE("singular A2 formula against grouping of standard modules") {
  for (const auto& theta : all_subsets(2))
    for (const char* w : {"0,-1", "-1,0", "0,-1/2", "-1/2+t1,-1/2-t1"}) {
      const auto tc = cosets_of('A', 2, theta);
      const Weight lam = weight(w);
      CAPTURE(w);
      CAPTURE(theta.size());
      const KLTable kl = compute_kl(tc, lam);
      const StabilizerData stab = stabilizer_data(*tc, lam);
      const CharacterFormula sing = singular_formula(kl, stab);
      CHECK(sing.rows.size() == stab.a_theta_stab.size());
      const std::vector<int> group = standard_module_grouping(*tc, lam);
      for (const FormulaRow& row : sing.rows) {
        std::map<int, std::int64_t> expected;
        for (const auto& [d, p] : kl.phi[row.irreducible.coset].coeffs()) expected[group[d]] += p.eval_minus_one();
        std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
        std::map<int, std::int64_t> got;
        for (const auto& e : row.entries) got[group[e.standard.coset]] += e.coeff;
        CHECK(got == expected);
      }
      if (std::string(w) == "0,-1" && theta.empty()) {
        const WeylGroup& g = tc->group();
        CHECK(stab.a_theta_stab == std::vector<int>{0, elt(g, {1}), elt(g, {0, 1})});
      }
    }
}

TEST_CASE("Verma characters of A2") {
  const auto g = group_of('A', 2);
  const CharacterFormula cf = verma_mode(g, weight("-1,-1"));
  CHECK(cf.rows.size() == 6);
  const FormulaRow* top = cf.row_for(g->longest());
  REQUIRE(top != nullptr);
  REQUIRE(top->entries.size() == 6);
  for (const auto& e : top->entries) CHECK(e.coeff == ((3 - g->length(e.standard.element)) % 2 ? -1 : 1));
  CHECK(entries(cf, 0) == Row{{0, 1}});
}

TEST_CASE("Verma characters of the mixed A3 weight stay in their blocks") {
  const auto g = group_of('A', 3);
  const Weight lam = weight("-5-4*t1, -5+4*t1, -5");
  const CharacterFormula cf = verma_mode(g, lam);
  const IntegralData d = integral_data(ThetaCosets(g, {}), lam);
  const int gb = elt(*g, {2, 1});
  const FormulaRow* row = cf.row_for(gb);
  REQUIRE(row != nullptr);
  bool has_diagonal = false;
  for (const auto& e : row->entries) {
    CHECK(d.w_lambda->contains(g->multiply(g->inverse(gb), e.standard.element)));
    has_diagonal |= e.standard.element == gb && e.coeff == 1;
  }
  CHECK(has_diagonal);
}

TEST_CASE("preconditions name the failing coroot") {
  const RootSystem a2 = RootSystem::build('A', 2);
  try {
    require_antidominant_regular(a2, weight("2,-3"));
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()) == "λ not antidominant: α^∨(λ) = 2");
  }
  CHECK_THROWS_AS(require_antidominant_regular(a2, weight("0,0")), std::invalid_argument);
  CHECK_THROWS_AS(verma_mode(group_of('A', 2), weight("0,-1")), std::invalid_argument);
}
