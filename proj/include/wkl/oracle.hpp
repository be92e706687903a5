#pragma once

#include "wkl/cosets.hpp"
#include "wkl/laurent.hpp"

#include <string>
#include <vector>

// Brute-force reference implementations. They share only the group tables
// with the production code and are meant for tests and `wkl verify`.
namespace wkl {

// Some subword of the stored reduced word of w is a reduced word of v.
// Throws std::length_error when l(w) > 12.
bool bruhat_subword(const WeylGroup& group, int v, int w);

struct ClassicalKL {
  int order = 0;
  std::vector<LaurentPoly> table;  // row-major (v, w)

  const LaurentPoly& poly(int v, int w) const { return table[static_cast<std::size_t>(v) * order + w]; }
};

// P_{v,w} from R-polynomials and the bar-invariance solve. Throws
// std::length_error when |W| > 1152.
ClassicalKL classical_kl(const WeylGroup& group);

// Bruhat order of a reflection subgroup from chains of reflections
// increasing the subgroup length; indexed by local ids.
std::vector<std::vector<bool>> reflection_chain_order(const ReflectionSubgroup& sub, const std::vector<int>& positive_roots);

// For each coset C, the smallest coset id D with W_Theta w^D lambda = W_Theta w^C lambda.
std::vector<int> standard_module_grouping(const ThetaCosets& tc, const Weight& lambda);

struct OracleCheck {
  std::string name;
  std::string scope;
  bool pass = true;
  std::string counterexample;
};

struct OracleReport {
  std::vector<OracleCheck> checks;

  bool all_pass() const;
  void add(std::string name, std::string scope, bool pass, std::string counterexample = {});
};

// Re-derives cosets, A_lambda, W_lambda, A_Theta,lambda, double cosets and
// integral models from definitions and compares with the production tables.
OracleReport recompute_cosets(const ThetaCosets& tc, const Weight& lambda);

// Exhaustive checks of the structural facts the KL recursion relies on:
// translation of integral systems by A_lambda, Bruhat compatibility of
// u W_lambda, the unique smallest coset of each double coset, conjugation
// of models by non-integral simple reflections and the descent chains.
OracleReport structural_properties(const ThetaCosets& tc, const Weight& lambda);

}  // namespace wkl
