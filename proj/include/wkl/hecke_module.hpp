#pragma once

#include "wkl/cosets.hpp"
#include "wkl/laurent.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace wkl {

struct SpaceMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

// Finitely supported combination of basis vectors delta_C with Laurent
// coefficients. Zero coefficients are never stored.
class HeckeElt {
 public:
  HeckeElt() = default;
  explicit HeckeElt(SpaceTag tag) : tag_(tag) {}

  static HeckeElt delta(SpaceTag tag, int c) {
    HeckeElt x(tag);
    x.add(c, LaurentPoly(1));
    return x;
  }

  SpaceTag tag() const { return tag_; }
  const std::map<int, LaurentPoly>& coeffs() const { return coeffs_; }
  LaurentPoly coeff(int c) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add(int c, const LaurentPoly& p);

  HeckeElt& operator+=(const HeckeElt& other);
  HeckeElt& operator-=(const HeckeElt& other);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const LaurentPoly& p, const HeckeElt& x);
  friend bool operator==(const HeckeElt& a, const HeckeElt& b);

  std::string to_string(const std::function<std::string(int)>& label) const;

 private:
  void check(const HeckeElt& other) const;

  SpaceTag tag_;
  std::map<int, LaurentPoly> coeffs_;
};

// T_alpha on H_Theta for a simple index alpha.
HeckeElt t_alpha(const ThetaCosets& tc, int alpha, const HeckeElt& x);
// T_alpha^{u,lambda} on a model for alpha in Pi_lambda (a root index).
HeckeElt t_alpha_model(const IntegralModel& model, int alpha_root, const HeckeElt& x);
// delta_C -> delta_{C s_i}.
HeckeElt right_mult_simple(const ThetaCosets& tc, const HeckeElt& x, int i);

// Splits x by double coset, one element per model (models in A_Theta,lambda order).
std::vector<HeckeElt> restrict_lambda(const ThetaCosets& tc, const IntegralData& idata,
                                      const std::vector<IntegralModel>& models, const HeckeElt& x);
// delta_E -> delta_{ind(E)}.
HeckeElt induce(const ThetaCosets& tc, const IntegralModel& model, const HeckeElt& y);
// delta_E -> delta_{s_beta E s_beta}, from the old model to the conjugated one.
HeckeElt conjugate(const IntegralModel& old_model, const ConjugatedModel& cm, const HeckeElt& y);

}  // namespace wkl
