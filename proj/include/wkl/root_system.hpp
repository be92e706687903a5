#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wkl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_integer(const Rational& r);

// Value of a coroot on a weight: constant + sum_j transcendental[j] * t_j,
// where the t_j are formally independent transcendentals.
struct Pairing {
  Rational constant;
  std::vector<Rational> transcendental;

  Pairing() = default;
  Pairing(Rational c, std::vector<Rational> t) : constant(std::move(c)), transcendental(std::move(t)) {}

  bool is_zero() const;
  Pairing operator-() const;
  Pairing& operator+=(const Pairing& other);
  Pairing& add_scaled(long long factor, const Pairing& other);

  friend bool operator==(const Pairing& a, const Pairing& b);
  friend bool operator<(const Pairing& a, const Pairing& b);
};

enum class Integrality { Integer, RationalNonInteger, Irrational };

struct Classification {
  Integrality kind;
  BigInt value;  // meaningful only for Integer

  bool is_integer() const { return kind == Integrality::Integer; }
};

Classification classify(const Pairing& value);

// A point of h^* recorded by its simple-coroot values alpha_i^vee(lambda).
class Weight {
 public:
  Weight() = default;
  Weight(std::size_t rank, std::size_t n_transcendentals);
  Weight(std::vector<Pairing> coords, std::size_t n_transcendentals);

  std::size_t rank() const { return coords_.size(); }
  std::size_t n_transcendentals() const { return n_trans_; }
  const Pairing& coord(std::size_t i) const { return coords_.at(i); }
  const std::vector<Pairing>& coords() const { return coords_; }

  std::string to_string() const;

  friend bool operator==(const Weight& a, const Weight& b);
  friend bool operator<(const Weight& a, const Weight& b);

 private:
  std::vector<Pairing> coords_;
  std::size_t n_trans_ = 0;
};

struct WeightFlags {
  bool antidominant;
  bool regular;
  bool integral;
};

class RootSystem {
 public:
  static constexpr int kMaxRank = 6;

  // Throws std::invalid_argument for anything that is not a finite
  // crystallographic type of rank <= kMaxRank.
  static RootSystem build(char type_letter, int rank);

  char type_letter() const { return letter_; }
  int rank() const { return rank_; }
  std::string name() const;
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return n_pos_; }
  bool is_positive(int r) const { return r < n_pos_; }
  int negate(int r) const { return r < n_pos_ ? r + n_pos_ : r - n_pos_; }
  int height(int r) const;

  // Coordinates in the simple-root basis; roots [0, rank) are the simple roots.
  const std::vector<int>& root(int r) const { return roots_.at(r); }
  // Coroot of root r in the simple-coroot basis.
  const std::vector<int>& coroot(int r) const { return coroots_.at(r); }
  std::optional<int> find_root(const std::vector<int>& coords) const;

  // s_r applied to root x.
  int reflect(int r, int x) const { return reflect_[r][x]; }
  // r^vee(x) for roots r, x.
  int coroot_value(int r, int x) const;

  // True when root r lies in the span of the given simple indices.
  bool supported_in(int r, std::span<const int> simple) const;

  Pairing pair(int r, const Weight& lambda) const;
  Weight rho() const;
  WeightFlags weight_flags(const Weight& lambda) const;
  // First positive root whose coroot value is a non-negative integer (a
  // positive integer when singular weights are allowed), if any.
  std::optional<int> antidominance_violation(const Weight& lambda, bool allow_singular = false) const;
  // lambda lies in the root lattice Z.Sigma.
  bool in_root_lattice(const Weight& lambda) const;

  // Human-readable names: alpha, beta, gamma, ... for simple roots and
  // sums like "α+2β" otherwise.
  static std::string simple_name(int i);
  std::string root_name(int r) const;
  std::string root_latex(int r) const;

 private:
  RootSystem() = default;

  char letter_ = 'A';
  int rank_ = 0;
  int n_pos_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> roots_;
  std::vector<std::vector<int>> coroots_;
  std::vector<std::vector<int>> reflect_;
};

Pairing pair(const RootSystem& rs, int root_index, const Weight& lambda);

}  // namespace wkl
