#include "wkl/hecke_module.hpp"

namespace wkl {

LaurentPoly HeckeElt::coeff(int c) const {
  auto it = coeffs_.find(c);
  return it == coeffs_.end() ? LaurentPoly() : it->second;
}

void HeckeElt::add(int c, const LaurentPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(c, p);
  if (inserted) return;
  it->second += p;
  if (it->second.is_zero()) coeffs_.erase(it);
}

void HeckeElt::check(const HeckeElt& other) const {
  if (!(tag_ == other.tag_)) throw SpaceMismatch("Hecke elements from different spaces");
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& other) {
  check(other);
  for (const auto& [c, p] : other.coeffs_) add(c, p);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& other) {
  check(other);
  for (const auto& [c, p] : other.coeffs_) add(c, -p);
  return *this;
}

HeckeElt operator*(const LaurentPoly& p, const HeckeElt& x) {
  HeckeElt out(x.tag_);
  if (p.is_zero()) return out;
  for (const auto& [c, r] : x.coeffs_) out.add(c, p * r);
  return out;
}

bool operator==(const HeckeElt& a, const HeckeElt& b) { return a.tag_ == b.tag_ && a.coeffs_ == b.coeffs_; }

std::string HeckeElt::to_string(const std::function<std::string(int)>& label) const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (const auto& [c, p] : coeffs_) {
    if (!s.empty()) s += " + ";
    const std::string ps = p.to_string();
    if (ps != "1") s += (p.terms().size() > 1 ? "(" + ps + ")" : ps) + "*";
    s += "δ[" + label(c) + "]";
  }
  return s;
}

namespace {

void apply_step(HeckeElt& out, int c, const LaurentPoly& p, CosetStep st) {
  switch (st.move) {
    case CosetMove::Fix:
      return;
    case CosetMove::Raise:
      out.add(c, p.shifted(1));
      break;
    case CosetMove::Lower:
      out.add(c, p.shifted(-1));
      break;
  }
  out.add(st.target, p);
}

}  // namespace

HeckeElt t_alpha(const ThetaCosets& tc, int alpha, const HeckeElt& x) {
  if (!(x.tag() == tc.tag())) throw SpaceMismatch("t_alpha: element is not in H_Theta");
  if (alpha < 0 || alpha >= tc.group().rank()) throw std::out_of_range("t_alpha: simple index out of range");
  HeckeElt out(tc.tag());
  for (const auto& [c, p] : x.coeffs()) apply_step(out, c, p, tc.step(c, alpha));
  return out;
}

HeckeElt t_alpha_model(const IntegralModel& model, int alpha_root, const HeckeElt& x) {
  if (!(x.tag() == model.tag())) throw SpaceMismatch("t_alpha_model: element is not in this model");
  HeckeElt out(model.tag());
  for (const auto& [e, p] : x.coeffs()) apply_step(out, e, p, model.step(e, alpha_root));
  return out;
}

HeckeElt right_mult_simple(const ThetaCosets& tc, const HeckeElt& x, int i) {
  if (!(x.tag() == tc.tag())) throw SpaceMismatch("right_mult_simple: element is not in H_Theta");
  HeckeElt out(tc.tag());
  for (const auto& [c, p] : x.coeffs()) out.add(tc.step(c, i).target, p);
  return out;
}

std::vector<HeckeElt> restrict_lambda(const ThetaCosets& tc, const IntegralData& idata,
                                      const std::vector<IntegralModel>& models, const HeckeElt& x) {
  if (!(x.tag() == tc.tag())) throw SpaceMismatch("restrict_lambda: element is not in H_Theta");
  if (models.size() != idata.a_theta_lambda.size()) throw std::invalid_argument("restrict_lambda: one model per double coset expected");
  std::vector<HeckeElt> out;
  for (const auto& m : models) out.emplace_back(m.tag());
  for (const auto& [c, p] : x.coeffs()) {
    const int idx = idata.double_coset_of[c];
    out[idx].add(models[idx].restrict(c), p);
  }
  return out;
}

HeckeElt induce(const ThetaCosets& tc, const IntegralModel& model, const HeckeElt& y) {
  if (!(y.tag() == model.tag())) throw SpaceMismatch("induce: element is not in this model");
  HeckeElt out(tc.tag());
  for (const auto& [e, p] : y.coeffs()) out.add(model.ind(e), p);
  return out;
}

HeckeElt conjugate(const IntegralModel& old_model, const ConjugatedModel& cm, const HeckeElt& y) {
  if (!(y.tag() == old_model.tag())) throw SpaceMismatch("conjugate: element is not in the source model");
  HeckeElt out(cm.model.tag());
  for (const auto& [e, p] : y.coeffs()) out.add(cm.to_new[e], p);
  return out;
}

}  // namespace wkl
