#include "wkl/root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wkl {

bool is_integer(const Rational& r) { return denominator(r) == 1; }

bool Pairing::is_zero() const {
  if (constant != 0) return false;
  return std::all_of(transcendental.begin(), transcendental.end(), [](const Rational& c) { return c == 0; });
}

Pairing Pairing::operator-() const {
  Pairing out = *this;
  out.constant = -out.constant;
  for (auto& c : out.transcendental) c = -c;
  return out;
}

Pairing& Pairing::operator+=(const Pairing& other) { return add_scaled(1, other); }

Pairing& Pairing::add_scaled(long long factor, const Pairing& other) {
  if (transcendental.size() != other.transcendental.size())
    throw std::invalid_argument("pairing: transcendental dimension mismatch");
  constant += factor * other.constant;
  for (std::size_t j = 0; j < transcendental.size(); ++j) transcendental[j] += factor * other.transcendental[j];
  return *this;
}

bool operator==(const Pairing& a, const Pairing& b) {
  return a.constant == b.constant && a.transcendental == b.transcendental;
}

bool operator<(const Pairing& a, const Pairing& b) {
  if (a.constant != b.constant) return a.constant < b.constant;
  return std::lexicographical_compare(a.transcendental.begin(), a.transcendental.end(), b.transcendental.begin(),
                                      b.transcendental.end());
}

Classification classify(const Pairing& value) {
  for (const auto& c : value.transcendental)
    if (c != 0) return {Integrality::Irrational, 0};
  if (!is_integer(value.constant)) return {Integrality::RationalNonInteger, 0};
  return {Integrality::Integer, numerator(value.constant)};
}

Weight::Weight(std::size_t rank, std::size_t n_transcendentals)
    : coords_(rank, Pairing{0, std::vector<Rational>(n_transcendentals, Rational(0))}), n_trans_(n_transcendentals) {}

Weight::Weight(std::vector<Pairing> coords, std::size_t n_transcendentals)
    : coords_(std::move(coords)), n_trans_(n_transcendentals) {
  for (const auto& c : coords_)
    if (c.transcendental.size() != n_trans_)
      throw std::invalid_argument("weight: every coordinate needs exactly " + std::to_string(n_trans_) +
                                  " transcendental coefficients");
}

namespace {

std::string format_pairing(const Pairing& p) {
  std::ostringstream out;
  bool first = true;
  if (p.constant != 0 || std::all_of(p.transcendental.begin(), p.transcendental.end(),
                                     [](const Rational& c) { return c == 0; })) {
    out << p.constant.str();
    first = false;
  }
  for (std::size_t j = 0; j < p.transcendental.size(); ++j) {
    const Rational& c = p.transcendental[j];
    if (c == 0) continue;
    if (c < 0) {
      out << "-";
    } else if (!first) {
      out << "+";
    }
    Rational a = c < 0 ? Rational(-c) : c;
    if (a != 1) out << a.str() << "*";
    out << "t" << (j + 1);
    first = false;
  }
  return out.str();
}

}  // namespace

std::string Weight::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ", ";
    s += format_pairing(coords_[i]);
  }
  return s;
}

bool operator==(const Weight& a, const Weight& b) { return a.n_trans_ == b.n_trans_ && a.coords_ == b.coords_; }

bool operator<(const Weight& a, const Weight& b) {
  if (a.n_trans_ != b.n_trans_) return a.n_trans_ < b.n_trans_;
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

namespace {

std::vector<std::vector<int>> cartan_matrix(char letter, int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (letter) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(2, 3);
      link(3, 4);
      link(4, 5);
      link(1, 3);
      break;
    case 'F':
      link(0, 1);
      link(2, 3);
      a[1][2] = -1;
      a[2][1] = -2;
      break;
    case 'G':
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

bool valid_type(char letter, int n) {
  if (n < 1 || n > RootSystem::kMaxRank) return false;
  switch (letter) {
    case 'A': return true;
    case 'B':
    case 'C': return n >= 2;
    case 'D': return n >= 4;
    case 'E': return n == 6;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

int height_of(const std::vector<int>& v) {
  int h = 0;
  for (int c : v) h += c;
  return h;
}

}  // namespace

RootSystem RootSystem::build(char type_letter, int rank) {
  if (!valid_type(type_letter, rank)) {
    std::ostringstream msg;
    msg << "invalid root system type " << type_letter << rank
        << " (supported: A1-A6, B2-B6, C2-C6, D4-D6, E6, F4, G2)";
    throw std::invalid_argument(msg.str());
  }
  RootSystem rs;
  rs.letter_ = type_letter;
  rs.rank_ = rank;
  rs.cartan_ = cartan_matrix(type_letter, rank);
  const auto& a = rs.cartan_;
  const int n = rank;

  // Closure of the simple roots (paired with their coroots) under simple reflections.
  std::map<std::vector<int>, std::vector<int>> found;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    found.emplace(e, e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<int> x = queue.front();
    queue.pop_front();
    const std::vector<int> xv = found.at(x);
    for (int i = 0; i < n; ++i) {
      int root_val = 0;    // alpha_i^vee(x)
      int coroot_val = 0;  // x^vee(alpha_i)
      for (int j = 0; j < n; ++j) {
        root_val += a[i][j] * x[j];
        coroot_val += xv[j] * a[j][i];
      }
      std::vector<int> y = x, yv = xv;
      y[i] -= root_val;
      yv[i] -= coroot_val;
      if (found.emplace(y, yv).second) queue.push_back(y);
    }
  }

  std::vector<std::vector<int>> positive;
  for (const auto& [coords, cor] : found)
    if (height_of(coords) > 0) positive.push_back(coords);
  std::sort(positive.begin(), positive.end(), [](const auto& l, const auto& r) {
    int hl = height_of(l), hr = height_of(r);
    if (hl != hr) return hl < hr;
    return l > r;
  });
  rs.n_pos_ = static_cast<int>(positive.size());
  if (rs.n_pos_ * 2 != static_cast<int>(found.size())) throw std::logic_error("root closure is not symmetric");
  for (const auto& p : positive) {
    rs.roots_.push_back(p);
    rs.coroots_.push_back(found.at(p));
  }
  for (const auto& p : positive) {
    std::vector<int> m = p;
    for (auto& c : m) c = -c;
    rs.roots_.push_back(m);
    rs.coroots_.push_back(found.at(m));
  }

  const int total = rs.num_roots();
  rs.reflect_.assign(total, std::vector<int>(total, -1));
  for (int r = 0; r < total; ++r) {
    for (int x = 0; x < total; ++x) {
      const int c = rs.coroot_value(r, x);
      std::vector<int> y = rs.roots_[x];
      for (int j = 0; j < n; ++j) y[j] -= c * rs.roots_[r][j];
      auto idx = rs.find_root(y);
      if (!idx) throw std::logic_error("reflection left the root system");
      rs.reflect_[r][x] = *idx;
    }
  }
  return rs;
}

std::string RootSystem::name() const { return std::string(1, letter_) + std::to_string(rank_); }

int RootSystem::height(int r) const { return height_of(roots_.at(r)); }

std::optional<int> RootSystem::find_root(const std::vector<int>& coords) const {
  for (int r = 0; r < num_roots(); ++r)
    if (roots_[r] == coords) return r;
  return std::nullopt;
}

int RootSystem::coroot_value(int r, int x) const {
  int v = 0;
  for (int j = 0; j < rank_; ++j) {
    if (coroots_[r][j] == 0) continue;
    int row = 0;
    for (int k = 0; k < rank_; ++k) row += cartan_[j][k] * roots_[x][k];
    v += coroots_[r][j] * row;
  }
  return v;
}

bool RootSystem::supported_in(int r, std::span<const int> simple) const {
  for (int j = 0; j < rank_; ++j) {
    if (roots_[r][j] == 0) continue;
    if (std::find(simple.begin(), simple.end(), j) == simple.end()) return false;
  }
  return true;
}

Pairing RootSystem::pair(int r, const Weight& lambda) const {
  if (static_cast<int>(lambda.rank()) != rank_)
    throw std::invalid_argument("pair: weight has rank " + std::to_string(lambda.rank()) + ", root system has rank " +
                                std::to_string(rank_));
  if (r < 0 || r >= num_roots()) throw std::out_of_range("pair: root index out of range");
  Pairing out{0, std::vector<Rational>(lambda.n_transcendentals(), Rational(0))};
  for (int j = 0; j < rank_; ++j)
    if (coroots_[r][j] != 0) out.add_scaled(coroots_[r][j], lambda.coord(j));
  return out;
}

Pairing pair(const RootSystem& rs, int root_index, const Weight& lambda) { return rs.pair(root_index, lambda); }

Weight RootSystem::rho() const {
  std::vector<Pairing> coords(rank_, Pairing{1, {}});
  return Weight(std::move(coords), 0);
}

WeightFlags RootSystem::weight_flags(const Weight& lambda) const {
  WeightFlags flags{true, true, true};
  for (int r = 0; r < num_roots(); ++r) {
    const Pairing v = pair(r, lambda);
    const Classification c = classify(v);
    if (v.is_zero()) flags.regular = false;
    if (!c.is_integer()) flags.integral = false;
    if (is_positive(r) && c.is_integer() && c.value >= 0) flags.antidominant = false;
  }
  return flags;
}

std::optional<int> RootSystem::antidominance_violation(const Weight& lambda, bool allow_singular) const {
  for (int r = 0; r < n_pos_; ++r) {
    const Classification c = classify(pair(r, lambda));
    if (c.is_integer() && (c.value > 0 || (c.value == 0 && !allow_singular))) return r;
  }
  return std::nullopt;
}

bool RootSystem::in_root_lattice(const Weight& lambda) const {
  for (const auto& c : lambda.coords())
    for (const auto& t : c.transcendental)
      if (t != 0) return false;
  // Solve cartan * n = (alpha_i^vee(lambda))_i and test integrality of n.
  const int n = rank_;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = cartan_[i][j];
    m[i][n] = lambda.coord(i).constant;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    for (int i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const Rational f = m[i][col] / m[col][col];
      for (int j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  for (int i = 0; i < n; ++i)
    if (!is_integer(m[i][n] / m[i][i])) return false;
  return true;
}

std::string RootSystem::simple_name(int i) {
  static const char* names[] = {"α", "β", "γ", "δ", "ε", "ζ"};
  if (i >= 0 && i < 6) return names[i];
  return "a" + std::to_string(i + 1);
}

namespace {

std::string combination(const std::vector<int>& coords, const char* const* names) {
  std::string s;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    int c = coords[j];
    if (c == 0) continue;
    if (c < 0) {
      s += "-";
      c = -c;
    } else if (!s.empty()) {
      s += "+";
    }
    if (c != 1) s += std::to_string(c);
    s += names[j];
  }
  return s;
}

}  // namespace

std::string RootSystem::root_name(int r) const {
  static const char* names[] = {"α", "β", "γ", "δ", "ε", "ζ"};
  return combination(roots_.at(r), names);
}

std::string RootSystem::root_latex(int r) const {
  static const char* names[] = {"\\alpha", "\\beta", "\\gamma", "\\delta", "\\epsilon", "\\zeta"};
  return combination(roots_.at(r), names);
}

}  // namespace wkl
