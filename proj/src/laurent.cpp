#include "wkl/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace wkl {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("Laurent coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("Laurent coefficient overflow");
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) terms_.emplace_back(0, constant);
}

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace_back(exponent, coeff);
  return p;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::domain_error("min_degree of the zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::domain_error("max_degree of the zero polynomial");
  return terms_.back().first;
}

std::int64_t LaurentPoly::coeff(int k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term& t, int e) { return t.first < e; });
  return (it != terms_.end() && it->first == k) ? it->second : 0;
}

std::int64_t LaurentPoly::eval_minus_one() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s = checked_add(s, (e % 2 == 0) ? c : -c);
  return s;
}

std::int64_t LaurentPoly::eval_one() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s = checked_add(s, c);
  return s;
}

bool LaurentPoly::in_qZq() const { return terms_.empty() || terms_.front().first >= 1; }

bool LaurentPoly::parity_homogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return ((t.first - d) % 2) == 0; });
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.first += k;
  return p;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k == 0) return LaurentPoly(eval_one());
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.add_term(e * k, c);
  return p;
}

LaurentPoly LaurentPoly::truncated_at_most(int degree) const {
  LaurentPoly p;
  for (const auto& t : terms_)
    if (t.first <= degree) p.terms_.push_back(t);
  return p;
}

void LaurentPoly::add_term(int exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {exponent, coeff});
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.cbegin();
  auto b = other.terms_.cbegin();
  while (a != terms_.cend() || b != other.terms_.cend()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      std::int64_t c = checked_add(a->second, b->second);
      if (c != 0) out.emplace_back(a->first, c);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = checked_mul(t.second, -1);
  return p;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<int, std::int64_t> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      auto& slot = acc[ea + eb];
      slot = checked_add(slot, checked_mul(ca, cb));
    }
  LaurentPoly p;
  for (const auto& [e, c] : acc)
    if (c != 0) p.terms_.emplace_back(e, c);
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& r) { return p + r; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& r) { return p * r; }
LaurentPoly scale(std::int64_t n, const LaurentPoly& p) { return LaurentPoly(n) * p; }

namespace {

std::string render(const std::vector<LaurentPoly::Term>& terms, bool latex) {
  if (terms.empty()) return "0";
  std::string s;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    auto [e, c] = *it;
    const bool negative = c < 0;
    const std::uint64_t mag = negative ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (it == terms.rbegin()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (e == 0) {
      s += std::to_string(mag);
      continue;
    }
    if (mag != 1) s += std::to_string(mag) + (latex ? "" : "*");
    s += "q";
    if (e != 1) s += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string LaurentPoly::to_string() const { return render(terms_, false); }
std::string LaurentPoly::to_latex() const { return render(terms_, true); }

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("Laurent polynomial parse error at position " + std::to_string(pos) + ": " + what);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_uint = [&]() -> std::int64_t {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected digit");
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = checked_add(checked_mul(v, 10), text[pos++] - '0');
    return v;
  };

  LaurentPoly p;
  skip_ws();
  if (pos == text.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    std::int64_t coeff = 1;
    bool have_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = read_uint();
      have_coeff = true;
    }
    int exponent = 0;
    if (pos < text.size() && text[pos] == '*') {
      if (!have_coeff) fail("'*' without coefficient");
      ++pos;
      if (pos >= text.size() || text[pos] != 'q') fail("expected 'q' after '*'");
    }
    if (pos < text.size() && text[pos] == 'q') {
      ++pos;
      exponent = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        int esign = 1;
        if (pos < text.size() && text[pos] == '-') {
          esign = -1;
          ++pos;
        }
        exponent = esign * static_cast<int>(read_uint());
      }
    } else if (!have_coeff) {
      fail("expected a term");
    }
    p.add_term(exponent, sign * coeff);
  }
  return p;
}

}  // namespace wkl
