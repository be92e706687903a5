#pragma once

#include "wkl/cosets.hpp"
#include "wkl/hecke_module.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wkl {

// Raised when a computed basis violates the defining normalization.
struct KLError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelBasis {
  std::vector<HeckeElt> psi;  // indexed by model coset

  LaurentPoly poly(int e, int f) const { return psi.at(e).coeff(f); }
};

// Model cosets in processing order: increasing lambda-length, then id.
std::vector<int> model_order(const IntegralModel& model);
// Roots alpha in Pi_lambda with E s_alpha < E.
std::vector<int> model_descents(const IntegralModel& model, int e);

ModelBasis kl_basis_model(const IntegralModel& model);
// psi(F) rebuilt through the descent alpha from the lower part of `basis`.
HeckeElt kl_basis_step(const IntegralModel& model, const ModelBasis& basis, int f, int alpha_root);

struct KLTable {
  std::shared_ptr<const ThetaCosets> cosets;
  IntegralData data;
  std::vector<IntegralModel> models;  // one per element of A_Theta,lambda
  std::vector<ModelBasis> bases;
  std::vector<HeckeElt> phi;  // indexed by global coset

  const ThetaCosets& tc() const { return *cosets; }
  int block(int c) const { return data.double_coset_of[c]; }
  const IntegralModel& model_of(int c) const { return models[block(c)]; }
  // P^{u,lambda}_{CD}; zero across double cosets.
  LaurentPoly poly(int c, int d) const;
  // D <=_{u,lambda} C inside one double coset.
  bool model_leq(int d, int c) const;
  int lambda_length(int c) const;
};

std::vector<HeckeElt> phi_transport(const ThetaCosets& tc, const std::vector<IntegralModel>& models,
                                    const std::vector<ModelBasis>& bases);

// Production path: KL bases per integral model, transported through ind.
KLTable compute_kl(std::shared_ptr<const ThetaCosets> tc, const Weight& lambda);

// Cross-check path: recursion over (weight, coset) using non-integral
// reflections and integral descents directly on H_Theta.
class DirectSolver {
 public:
  explicit DirectSolver(std::shared_ptr<const ThetaCosets> tc);

  const HeckeElt& phi(const Weight& lambda, int c);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  HeckeElt compute(const Weight& lambda, int c);

  std::shared_ptr<const ThetaCosets> tc_;
  std::vector<int> by_length_desc_;
  std::map<std::pair<Weight, int>, HeckeElt> memo_;
};

std::vector<HeckeElt> phi_direct(std::shared_ptr<const ThetaCosets> tc, const Weight& lambda);

// Every failed structural invariant of the table, as readable messages.
std::vector<std::string> kl_invariant_violations(const KLTable& kl);

// Theta empty and lambda integral regular: compares P_{wv} against the
// classical polynomials through P_{wv}(q) = q^{l(w)-l(v)} P_{v,w}(q^{-2}).
bool kl_classical_relation_check(std::shared_ptr<const WeylGroup> group, const Weight& lambda,
                                 std::string* first_failure = nullptr);

}  // namespace wkl
