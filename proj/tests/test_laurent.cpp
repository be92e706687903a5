#include "wkl/laurent.hpp"

#include <doctest.h>

#include <limits>
#include <stdexcept>

using wkl::LaurentPoly;

namespace {
const LaurentPoly q = LaurentPoly::q();
const LaurentPoly qi = LaurentPoly::monomial(1, -1);
const LaurentPoly one(1);
}  // namespace

TEST_CASE("ring operations") {
  CHECK(wkl::add(q, qi).to_string() == "q + q^-1");
  CHECK(wkl::mul(q, qi) == one);
  CHECK((one + q) * (one - q) == one - q * q);
  CHECK(wkl::scale(3, q) == LaurentPoly::monomial(3, 1));
  CHECK((q - q).is_zero());
  CHECK((q - q).terms().empty());
  CHECK(-(one + q) == LaurentPoly(-1) - q);
}

TEST_CASE("evaluation is a ring map") {
  const LaurentPoly a = q * q - LaurentPoly(3) * qi + LaurentPoly(2);
  const LaurentPoly b = LaurentPoly::monomial(5, 3) + qi * qi;
  CHECK(q.eval_minus_one() == -1);
  CHECK((a * b).eval_minus_one() == a.eval_minus_one() * b.eval_minus_one());
  CHECK((a + b).eval_one() == a.eval_one() + b.eval_one());
}

TEST_CASE("predicates") {
  CHECK((q + q * q * q).in_qZq());
  CHECK_FALSE((one + q).in_qZq());
  CHECK_FALSE(qi.in_qZq());
  CHECK(LaurentPoly().in_qZq());
  CHECK((q + q * q * q).parity_homogeneous(1));
  CHECK_FALSE((q * q).parity_homogeneous(1));
  CHECK((q * q).parity_homogeneous(-2));
}

TEST_CASE("degree operations") {
  const LaurentPoly p = LaurentPoly::monomial(2, 3) + q - LaurentPoly(4) + qi;
  CHECK(p.min_degree() == -1);
  CHECK(p.max_degree() == 3);
  CHECK(p.coeff(3) == 2);
  CHECK(p.coeff(2) == 0);
  CHECK(p.shifted(1).coeff(4) == 2);
  CHECK(p.truncated_at_most(0) == LaurentPoly(-4) + qi);
  CHECK(p.substitute_power(-2).coeff(-6) == 2);
  CHECK(p.substitute_power(-2).coeff(2) == 1);
}

TEST_CASE("text round trip") {
  for (const LaurentPoly& p : {LaurentPoly(), one, q, qi, LaurentPoly::monomial(-3, 2) + q - LaurentPoly(7),
                               LaurentPoly::monomial(12, -4) - qi}) {
    CAPTURE(p.to_string());
    CHECK(LaurentPoly::parse(p.to_string()) == p);
  }
  CHECK((LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(3, 1) - one).to_string() == "q^2 + 3*q - 1");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(qi.to_string() == "q^-1");
  CHECK(LaurentPoly::parse("  2*q^3 -q +1 ") == LaurentPoly::monomial(2, 3) - q + one);
  CHECK_THROWS_AS(LaurentPoly::parse("q^"), std::invalid_argument);
  CHECK_THROWS_AS(LaurentPoly::parse("2*x"), std::invalid_argument);
}

TEST_CASE("latex") {
  CHECK(q.to_latex() == "q");
  CHECK((LaurentPoly::monomial(1, 2) - qi).to_latex() == "q^{2} - q^{-1}");
}

TEST_CASE("overflow is detected") {
  const LaurentPoly big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + one, std::overflow_error);
  CHECK_THROWS_AS(big * LaurentPoly(2), std::overflow_error);
}
