#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wkl {

// Element of Z[q, q^-1], stored as (exponent, coefficient) pairs sorted by
// exponent with no zero coefficients. Coefficient overflow throws.
class LaurentPoly {
 public:
  using Term = std::pair<int, std::int64_t>;

  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(std::int64_t coeff, int exponent);
  static LaurentPoly q() { return monomial(1, 1); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_degree() const;
  int max_degree() const;

  std::int64_t coeff(int k) const;
  std::int64_t eval_minus_one() const;
  std::int64_t eval_one() const;
  bool in_qZq() const;
  // Every exponent is congruent to d modulo 2.
  bool parity_homogeneous(int d) const;

  LaurentPoly shifted(int k) const;                // q^k * p
  LaurentPoly substitute_power(int k) const;       // p(q^k)
  LaurentPoly truncated_at_most(int degree) const; // terms with exponent <= degree

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  // Descending exponents, e.g. "q^2 + 3*q - 1", "q^-1", "0".
  std::string to_string() const;
  std::string to_latex() const;
  // Inverse of to_string; throws std::invalid_argument with the offending position.
  static LaurentPoly parse(std::string_view text);

 private:
  void add_term(int exponent, std::int64_t coeff);
  std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& r);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& r);
LaurentPoly scale(std::int64_t n, const LaurentPoly& p);

}  // namespace wkl
