#include "support.hpp"

#include "wkl/report.hpp"

#include <doctest.h>

using namespace wkl;
using namespace wkl::testing;

namespace {

Report full_report(char letter, int rank, std::vector<int> theta, const std::string& lambda) {
  const auto tc = cosets_of(letter, rank, std::move(theta));
  const KLTable kl = compute_kl(tc, weight(lambda));
  Report r;
  r.context = make_context(kl);
  r.cosets = make_cosets(kl);
  r.models = make_models(kl);
  r.kl_polynomials = make_polys(kl);
  const CharacterFormula cf = regular_formula(kl);
  r.character_mode = "regular";
  r.characters = make_characters(*tc, cf);
  r.multiplicities = make_multiplicities(*tc, invert_multiplicities(cf));
  return r;
}

}  // namespace

TEST_CASE("mixed A3 report contents") {
  const Report r = full_report('A', 3, {0, 1}, "-5-4*t1, -5+4*t1, -5");
  CHECK(r.context.type == "A3");
  CHECK(r.context.theta == std::vector<std::string>{"α", "β"});
  CHECK(r.context.a_lambda == std::vector<std::string>{"1", "s_α", "s_β", "s_γ s_β"});
  CHECK(r.context.a_theta_lambda == std::vector<std::string>{"1", "s_γ s_β"});
  REQUIRE(r.models.size() == 2);
  CHECK(r.models[0].theta == std::vector<std::string>{"α+β"});
  CHECK(r.models[0].cosets == std::vector<std::string>{"s_{α+β}", "s_{α+β} s_γ", "s_{α+β+γ}"});
  CHECK(r.models[0].ind == std::vector<std::string>{"W_Θ s_α s_β s_α", "W_Θ s_α s_β s_α s_γ",
                                                     "W_Θ s_α s_β s_α s_γ s_β s_α"});
  CHECK(r.kl_polynomials.size() == 7);
  const std::string text = render_text(r);
  CHECK(text.find("ch L(W_Θ s_α s_β s_α s_γ s_β s_α) = -ch M(W_Θ s_α s_β s_α s_γ) + ch M(W_Θ s_α s_β s_α s_γ s_β s_α)") !=
        std::string::npos);
  CHECK(text.find("P(W_• s_{α+β+γ}, W_• s_{α+β} s_γ) = q") != std::string::npos);
}

TEST_CASE("json round trip") {
  for (const auto& [t, n, theta, lam] :
       {std::tuple{'A', 3, std::vector<int>{0, 1}, "-5-4*t1, -5+4*t1, -5"}, std::tuple{'B', 2, std::vector<int>{}, "-1/2,-1"},
        std::tuple{'G', 2, std::vector<int>{1}, "-1,-1/3"}}) {
    const Report r = full_report(t, n, theta, lam);
    const std::string json = render_json(r);
    CHECK(parse_report_json(json) == r);
    CHECK(render_json(parse_report_json(json)) == json);
  }
  CHECK_THROWS_AS(parse_report_json("{\"context\": 3}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_report_json("not json"), std::invalid_argument);
}

TEST_CASE("output is byte stable") {
  const Report a = full_report('B', 3, {0}, "-1/2,-1,-1");
  const Report b = full_report('B', 3, {0}, "-1/2,-1,-1");
  CHECK(render_text(a) == render_text(b));
  CHECK(render_json(a) == render_json(b));
  CHECK(render_latex(a) == render_latex(b));
}

TEST_CASE("latex table") {
  const std::string tex = render_latex(full_report('A', 3, {0, 1}, "-5-4*t1, -5+4*t1, -5"));
  CHECK(tex.find("\\begin{tabular}") != std::string::npos);
  CHECK(tex.find("s_{\\alpha+\\beta+\\gamma}") != std::string::npos);
  CHECK(tex.find("\\begin{align*}") != std::string::npos);
}
