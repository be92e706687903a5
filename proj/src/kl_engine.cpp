#include "wkl/kl_engine.hpp"

#include "wkl/oracle.hpp"

#include <algorithm>

namespace wkl {

std::vector<int> model_order(const IntegralModel& model) {
  std::vector<int> order(model.size());
  for (int e = 0; e < model.size(); ++e) order[e] = e;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return model.coset(a).length < model.coset(b).length; });
  return order;
}

std::vector<int> model_descents(const IntegralModel& model, int e) {
  std::vector<int> out;
  for (int r : model.subgroup().simple_roots())
    if (model.step(e, r).move == CosetMove::Lower) out.push_back(r);
  return out;
}

namespace {

void check_normalized(const HeckeElt& x, int f, const std::string& where) {
  if (!(x.coeff(f) == LaurentPoly(1))) throw KLError(where + ": leading coefficient is " + x.coeff(f).to_string());
  for (const auto& [g, p] : x.coeffs())
    if (g != f && !p.in_qZq()) throw KLError(where + ": coefficient " + p.to_string() + " is not in qZ[q]");
}

}  // namespace

HeckeElt kl_basis_step(const IntegralModel& model, const ModelBasis& basis, int f, int alpha_root) {
  const CosetStep st = model.step(f, alpha_root);
  if (st.move != CosetMove::Lower) throw std::invalid_argument("kl_basis_step: root is not a descent of the coset");
  HeckeElt xi = t_alpha_model(model, alpha_root, basis.psi.at(st.target));

  // Lower cosets by decreasing lambda-length, ties by id.
  std::vector<int> lower;
  for (int g = 0; g < model.size(); ++g)
    if (model.less(g, f)) lower.push_back(g);
  std::sort(lower.begin(), lower.end(), [&](int a, int b) {
    if (model.coset(a).length != model.coset(b).length) return model.coset(a).length > model.coset(b).length;
    return a < b;
  });
  for (int g : lower) {
    const std::int64_t c = xi.coeff(g).coeff(0);
    if (c != 0) xi -= LaurentPoly(c) * basis.psi.at(g);
  }
  check_normalized(xi, f, "kl_basis_model");
  for (const auto& [g, p] : xi.coeffs())
    if (!model.leq(g, f)) throw KLError("kl_basis_model: support leaves the lower interval");
  return xi;
}

ModelBasis kl_basis_model(const IntegralModel& model) {
  ModelBasis basis;
  basis.psi.assign(model.size(), HeckeElt(model.tag()));
  for (int f : model_order(model)) {
    const std::vector<int> desc = model_descents(model, f);
    if (desc.empty()) {
      if (f != model.identity_coset()) throw KLError("kl_basis_model: non-identity coset without descent");
      basis.psi[f] = HeckeElt::delta(model.tag(), f);
      continue;
    }
    // Simple roots of W_lambda are sorted by root index.
    basis.psi[f] = kl_basis_step(model, basis, f, desc.front());
  }
  return basis;
}

LaurentPoly KLTable::poly(int c, int d) const {
  if (block(c) != block(d)) return LaurentPoly();
  const IntegralModel& m = model_of(c);
  return bases[block(c)].poly(m.restrict(c), m.restrict(d));
}

bool KLTable::model_leq(int d, int c) const {
  if (block(c) != block(d)) return false;
  const IntegralModel& m = model_of(c);
  return m.leq(m.restrict(d), m.restrict(c));
}

int KLTable::lambda_length(int c) const {
  const IntegralModel& m = model_of(c);
  return m.coset(m.restrict(c)).length;
}

std::vector<HeckeElt> phi_transport(const ThetaCosets& tc, const std::vector<IntegralModel>& models,
                                    const std::vector<ModelBasis>& bases) {
  std::vector<HeckeElt> phi(tc.size(), HeckeElt(tc.tag()));
  for (std::size_t k = 0; k < models.size(); ++k)
    for (int e = 0; e < models[k].size(); ++e) phi[models[k].ind(e)] = induce(tc, models[k], bases[k].psi[e]);
  return phi;
}

KLTable compute_kl(std::shared_ptr<const ThetaCosets> tc, const Weight& lambda) {
  KLTable kl;
  kl.cosets = tc;
  kl.data = integral_data(*tc, lambda);
  kl.models = build_all_models(*tc, kl.data);
  for (const auto& m : kl.models) kl.bases.push_back(kl_basis_model(m));
  kl.phi = phi_transport(*tc, kl.models, kl.bases);
  return kl;
}

// --------------------------------------------------------------- DirectSolver

DirectSolver::DirectSolver(std::shared_ptr<const ThetaCosets> tc) : tc_(std::move(tc)) {
  by_length_desc_.resize(tc_->size());
  for (int c = 0; c < tc_->size(); ++c) by_length_desc_[c] = c;
  std::stable_sort(by_length_desc_.begin(), by_length_desc_.end(),
                   [&](int a, int b) { return tc_->length(a) > tc_->length(b); });
}

const HeckeElt& DirectSolver::phi(const Weight& lambda, int c) {
  auto key = std::make_pair(lambda, c);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  HeckeElt value = compute(lambda, c);
  return memo_.emplace(std::move(key), std::move(value)).first->second;
}

HeckeElt DirectSolver::compute(const Weight& lambda, int c) {
  const ThetaCosets& tc = *tc_;
  const WeylGroup& w = tc.group();
  const RootSystem& rs = w.roots();
  if (c == tc.identity_coset()) return HeckeElt::delta(tc.tag(), c);

  int integral_descent = -1;
  for (int i = 0; i < rs.rank(); ++i) {
    const CosetStep st = tc.step(c, i);
    if (st.move != CosetMove::Lower) continue;
    if (!classify(rs.pair(i, lambda)).is_integer()) {
      const Weight next = w.act_on_weight(w.reflection(i), lambda);
      return right_mult_simple(tc, phi(next, st.target), i);
    }
    if (integral_descent < 0) integral_descent = i;
  }
  if (integral_descent < 0) throw KLError("phi_direct: coset without descent");

  HeckeElt xi = t_alpha(tc, integral_descent, phi(lambda, tc.step(c, integral_descent).target));
  for (int d : by_length_desc_) {
    if (!tc.less(d, c)) continue;
    const std::int64_t k = xi.coeff(d).coeff(0);
    if (k != 0) xi -= LaurentPoly(k) * phi(lambda, d);
  }
  check_normalized(xi, c, "phi_direct");
  return xi;
}

std::vector<HeckeElt> phi_direct(std::shared_ptr<const ThetaCosets> tc, const Weight& lambda) {
  DirectSolver solver(tc);
  std::vector<HeckeElt> out;
  for (int c = 0; c < tc->size(); ++c) out.push_back(solver.phi(lambda, c));
  return out;
}

// ----------------------------------------------------------------- invariants

std::vector<std::string> kl_invariant_violations(const KLTable& kl) {
  std::vector<std::string> out;
  const ThetaCosets& tc = kl.tc();
  auto where = [&](int c, int d) { return "(" + std::to_string(c) + "," + std::to_string(d) + ")"; };
  for (int c = 0; c < tc.size(); ++c) {
    const HeckeElt& row = kl.phi[c];
    if (!(row.tag() == tc.tag())) out.push_back("phi row " + std::to_string(c) + " has the wrong space");
    for (const auto& [d, p] : row.coeffs()) {
      if (!(p == kl.poly(c, d))) out.push_back("phi and P disagree at " + where(c, d));
      if (d == c) {
        if (!(p == LaurentPoly(1))) out.push_back("diagonal entry is not 1 at " + where(c, d));
        continue;
      }
      if (!p.in_qZq()) out.push_back("entry outside qZ[q] at " + where(c, d));
      if (!kl.model_leq(d, c)) out.push_back("entry outside the lower model interval at " + where(c, d));
      if (kl.lambda_length(d) >= kl.lambda_length(c)) out.push_back("matrix is not unitriangular at " + where(c, d));
      if (!p.parity_homogeneous(kl.lambda_length(c) - kl.lambda_length(d)))
        out.push_back("parity fails at " + where(c, d));
    }
    if (row.coeff(c).is_zero()) out.push_back("missing diagonal entry at " + std::to_string(c));
  }
  return out;
}

bool kl_classical_relation_check(std::shared_ptr<const WeylGroup> group, const Weight& lambda,
                                 std::string* first_failure) {
  const RootSystem& rs = group->roots();
  const WeightFlags flags = rs.weight_flags(lambda);
  if (!flags.integral || !flags.regular) throw std::invalid_argument("classical relation check needs an integral regular weight");
  auto tc = std::make_shared<const ThetaCosets>(group, std::vector<int>{});
  const KLTable kl = compute_kl(tc, lambda);
  const ClassicalKL classical = classical_kl(*group);
  for (int wi = 0; wi < group->size(); ++wi) {
    for (int v = 0; v < group->size(); ++v) {
      const LaurentPoly ours = kl.poly(tc->coset_of(wi), tc->coset_of(v));
      const LaurentPoly expected =
          classical.poly(v, wi).substitute_power(-2).shifted(group->length(wi) - group->length(v));
      if (!(ours == expected)) {
        if (first_failure)
          *first_failure = "w=" + group->word_string(wi) + " v=" + group->word_string(v) + ": " + ours.to_string() +
                           " vs " + expected.to_string();
        return false;
      }
    }
  }
  return true;
}

}  // namespace wkl
