#pragma once

#include "wkl/root_system.hpp"
#include "wkl/weyl_group.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace wkl {

// Identifies the basis index set of a Hecke module; elements of different
// spaces never mix.
struct SpaceTag {
  std::uint64_t id = 0;
  friend bool operator==(SpaceTag a, SpaceTag b) { return a.id == b.id; }
};

SpaceTag next_space_tag();

enum class CosetMove { Raise, Fix, Lower };

struct CosetStep {
  CosetMove move;
  int target;
};

struct Coset {
  int id = 0;
  std::vector<int> members;  // element ids, ascending
  int longest = 0;           // w^C
  int shortest = 0;
};

// Right cosets W_Theta w of a standard parabolic subgroup. Coset ids follow
// the id of their shortest element, so they are sorted by length.
class ThetaCosets {
 public:
  ThetaCosets(std::shared_ptr<const WeylGroup> group, std::vector<int> theta);

  const WeylGroup& group() const { return *group_; }
  std::shared_ptr<const WeylGroup> group_ptr() const { return group_; }
  const std::vector<int>& theta() const { return theta_; }
  bool in_theta(int i) const;
  SpaceTag tag() const { return tag_; }

  int size() const { return static_cast<int>(cosets_.size()); }
  const Coset& coset(int c) const { return cosets_.at(c); }
  int coset_of(int w) const { return coset_of_[w]; }
  int identity_coset() const { return coset_of_[0]; }
  int theta_longest() const { return cosets_[identity_coset()].longest; }
  int length(int c) const { return group_->length(cosets_[c].longest); }

  // Classification of C s_i against C.
  CosetStep step(int c, int i) const { return steps_[c][i]; }
  // The coset C w.
  int times(int c, int w) const { return coset_of_[group_->multiply(cosets_[c].longest, w)]; }

  bool leq(int c, int d) const { return group_->bruhat_leq(cosets_[c].longest, cosets_[d].longest); }
  bool less(int c, int d) const { return c != d && leq(c, d); }

  // w^{-1} Theta inside the positive (resp. negative) roots.
  bool is_shortest_rep(int w) const;
  bool is_longest_rep(int w) const;

  // "W_Θ " followed by the word of w^C; just the word when Theta is empty.
  std::string label(int c) const;

 private:
  std::shared_ptr<const WeylGroup> group_;
  std::vector<int> theta_;
  SpaceTag tag_;
  std::vector<Coset> cosets_;
  std::vector<int> coset_of_;
  std::vector<std::vector<CosetStep>> steps_;
};

ThetaCosets build_theta_cosets(std::shared_ptr<const WeylGroup> group, std::vector<int> theta);
CosetStep coset_times_simple(const ThetaCosets& tc, int c, int i);

// A reflection subgroup of W generated by reflections in a simple system
// of a root subsystem, viewed as a Coxeter system with those generators.
class ReflectionSubgroup {
 public:
  ReflectionSubgroup(std::shared_ptr<const WeylGroup> group, std::vector<int> simple_roots);

  const WeylGroup& group() const { return *group_; }
  const std::vector<int>& simple_roots() const { return simple_; }
  int generator_index(int root) const;
  const std::vector<int>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool contains(int w) const { return local_[w] >= 0; }
  int local_index(int w) const { return local_[w]; }

  int length(int w) const { return length_[local_[w]]; }
  int times_generator(int w, int k) const { return right_[local_[w]][k]; }
  bool is_descent(int w, int k) const;
  const std::vector<int>& word(int w) const { return word_[local_[w]]; }

  bool bruhat_leq(int v, int w) const;

 private:
  int cached(int a, int b) const;
  void store(int a, int b, bool value) const;

  std::shared_ptr<const WeylGroup> group_;
  std::vector<int> simple_;
  std::vector<int> elements_;
  std::vector<int> local_;
  std::vector<int> length_;
  std::vector<std::vector<int>> right_;
  std::vector<std::vector<int>> word_;
  mutable std::mutex memo_mutex_;
  mutable std::vector<std::int8_t> memo_;
};

struct IntegralData {
  Weight lambda;
  std::vector<int> sigma_lambda;
  std::vector<int> sigma_lambda_pos;
  std::vector<int> pi_lambda;
  std::shared_ptr<const ReflectionSubgroup> w_lambda;
  std::vector<int> a_lambda;
  std::vector<int> a_theta_lambda;
  // Global coset -> index into a_theta_lambda of its (W_Theta, W_lambda)-double coset.
  std::vector<int> double_coset_of;
  std::vector<std::vector<int>> double_cosets;

  bool is_integral_root(int r) const;
  bool in_pi_lambda(int r) const;
  int double_coset_rep(int c) const { return a_theta_lambda[double_coset_of[c]]; }
};

IntegralData integral_data(const ThetaCosets& tc, const Weight& lambda);

struct ModelCoset {
  int id = 0;
  std::vector<int> members;  // ids of elements of W_lambda
  int longest = 0;           // longest for the W_lambda length
  int length = 0;            // lambda-length of `longest`
};

// The integral model of the double coset W_Theta u W_lambda: right cosets of
// the parabolic subgroup of (W_lambda, Pi_lambda) on Theta(u, lambda), with
// the bijection ind onto the right W_Theta-cosets of the double coset.
class IntegralModel {
 public:
  int u() const { return u_; }
  const Weight& lambda() const { return lambda_; }
  const std::vector<int>& theta() const { return theta_; }
  const ReflectionSubgroup& subgroup() const { return *w_lambda_; }
  SpaceTag tag() const { return tag_; }

  int size() const { return static_cast<int>(cosets_.size()); }
  const ModelCoset& coset(int e) const { return cosets_.at(e); }
  int coset_of(int w) const;
  int identity_coset() const { return coset_of(0); }

  // Classification of E s_alpha against E for alpha in Pi_lambda; throws otherwise.
  CosetStep step(int e, int alpha_root) const;
  bool leq(int e, int f) const { return order_[e][f]; }
  bool less(int e, int f) const { return e != f && order_[e][f]; }

  int ind(int e) const { return ind_[e]; }
  // (-)|_lambda on one double coset; -1 outside it.
  int restrict(int c) const;

  std::string label(int e) const;
  std::string label_latex(int e) const;

 private:
  friend IntegralModel build_integral_model(const ThetaCosets& tc, const IntegralData& idata, int u);

  int u_ = 0;
  Weight lambda_;
  std::vector<int> theta_;
  std::shared_ptr<const ReflectionSubgroup> w_lambda_;
  std::shared_ptr<const WeylGroup> group_;
  SpaceTag tag_;
  std::vector<ModelCoset> cosets_;
  std::vector<int> coset_of_;  // indexed by local id in W_lambda
  std::vector<std::vector<CosetStep>> steps_;
  std::vector<std::vector<bool>> order_;
  std::vector<int> ind_;
  std::unordered_map<int, int> restrict_;  // global coset -> model coset
  int n_global_ = 0;
};

IntegralModel build_integral_model(const ThetaCosets& tc, const IntegralData& idata, int u);
std::vector<IntegralModel> build_all_models(const ThetaCosets& tc, const IntegralData& idata);

struct ConjugatedModel {
  int beta = 0;
  IntegralData data;  // integral data of s_beta lambda
  int r = 0;
  IntegralModel model;      // model of (r, s_beta lambda)
  std::vector<int> to_new;  // E -> s_beta E s_beta
  std::vector<int> to_old;
};

// beta must be a simple index that is non-integral for the model's weight.
ConjugatedModel conjugate_model(const ThetaCosets& tc, const IntegralModel& model, int beta);

struct DescentChain {
  int alpha = 0;            // root index in Pi_lambda
  std::vector<int> chain;   // simple indices beta_1 .. beta_s
};

DescentChain descent_chain(const ThetaCosets& tc, const IntegralData& idata, int c);

struct StabilizerData {
  std::vector<int> stabilizer;       // W^lambda
  std::vector<int> singular_roots;   // Sigma^lambda
  std::vector<int> a_theta_stab;     // A_Theta^lambda
  // Global coset -> index into a_theta_stab of its (W_Theta, W^lambda)-double coset.
  std::vector<int> double_coset_of;
};

StabilizerData stabilizer_data(const ThetaCosets& tc, const Weight& lambda);

// Simple roots of a positive system of a root subsystem: the members whose
// reflection permutes the rest of the system.
std::vector<int> simple_system(const RootSystem& rs, const std::vector<int>& sigma_pos);

}  // namespace wkl
