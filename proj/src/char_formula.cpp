#include "wkl/char_formula.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wkl {

const FormulaRow* CharacterFormula::row_for(int coset) const {
  for (const auto& row : rows)
    if (row.irreducible.coset == coset) return &row;
  return nullptr;
}

void require_antidominant_regular(const RootSystem& rs, const Weight& lambda) {
  if (auto bad = rs.antidominance_violation(lambda))
    throw std::invalid_argument("λ not antidominant: " + rs.root_name(*bad) +
                                "^∨(λ) = " + classify(rs.pair(*bad, lambda)).value.str());
  if (!rs.weight_flags(lambda).regular) throw std::invalid_argument("λ not regular");
}

CharacterFormula regular_formula(const KLTable& kl) {
  const ThetaCosets& tc = kl.tc();
  require_antidominant_regular(tc.group().roots(), kl.data.lambda);
  CharacterFormula cf;
  cf.mode = FormulaMode::Regular;
  for (int c = 0; c < tc.size(); ++c) {
    FormulaRow row;
    row.irreducible = {c, tc.coset(c).longest};
    for (const auto& [d, p] : kl.phi[c].coeffs()) {
      const std::int64_t v = p.eval_minus_one();
      if (v != 0) row.entries.push_back({{d, tc.coset(d).longest}, v});
    }
    cf.rows.push_back(std::move(row));
  }
  return cf;
}

MultiplicityMatrix invert_multiplicities(const CharacterFormula& cf) {
  if (cf.mode != FormulaMode::Regular) throw std::invalid_argument("invert_multiplicities: regular formula expected");
  MultiplicityMatrix out;
  std::map<int, int> pos;
  for (const auto& row : cf.rows) {
    pos[row.irreducible.coset] = static_cast<int>(out.labels.size());
    out.labels.push_back(row.irreducible);
  }
  const int n = static_cast<int>(out.labels.size());
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (const auto& e : cf.rows[i].entries) {
      auto it = pos.find(e.standard.coset);
      if (it == pos.end()) throw std::invalid_argument("invert_multiplicities: standard label without a row");
      a[i][it->second] = e.coeff;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (a[i][i] != 1) throw std::invalid_argument("invert_multiplicities: matrix is not unitriangular");
    for (int j = i + 1; j < n; ++j)
      if (a[i][j] != 0) throw std::invalid_argument("invert_multiplicities: matrix is not unitriangular");
  }
  // a is lower unitriangular; b = a^{-1} by forward substitution.
  std::vector<std::vector<std::int64_t>> b(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    b[i][i] = 1;
    for (int j = 0; j < i; ++j) {
      std::int64_t s = 0;
      for (int k = j; k < i; ++k) s -= a[i][k] * b[k][j];
      b[i][j] = s;
    }
  }
  out.m = std::move(b);
  return out;
}

CharacterFormula singular_formula(const KLTable& kl, const StabilizerData& stab) {
  const ThetaCosets& tc = kl.tc();
  const RootSystem& rs = tc.group().roots();
  if (auto bad = rs.antidominance_violation(kl.data.lambda, true))
    throw std::invalid_argument("λ not antidominant: " + rs.root_name(*bad) +
                                "^∨(λ) = " + classify(rs.pair(*bad, kl.data.lambda)).value.str());
  if (stab.double_coset_of.size() != static_cast<std::size_t>(tc.size()))
    throw std::invalid_argument("singular_formula: stabilizer data for another coset space");

  CharacterFormula cf;
  cf.mode = FormulaMode::Singular;
  for (int v : stab.a_theta_stab) {
    const int c = tc.coset_of(v);
    FormulaRow row;
    row.irreducible = {c, v};
    std::map<int, std::int64_t> sums;  // index into a_theta_stab -> coefficient
    for (const auto& [d, p] : kl.phi[c].coeffs()) sums[stab.double_coset_of[d]] += p.eval_minus_one();
    for (const auto& [idx, value] : sums) {
      if (value == 0) continue;
      const int z = stab.a_theta_stab[idx];
      row.entries.push_back({{tc.coset_of(z), z}, value});
    }
    std::sort(row.entries.begin(), row.entries.end(),
              [](const FormulaEntry& a, const FormulaEntry& b) { return a.standard.coset < b.standard.coset; });
    cf.rows.push_back(std::move(row));
  }
  return cf;
}

CharacterFormula verma_mode(std::shared_ptr<const WeylGroup> group, const Weight& lambda) {
  require_antidominant_regular(group->roots(), lambda);
  auto tc = std::make_shared<const ThetaCosets>(std::move(group), std::vector<int>{});
  return regular_formula(compute_kl(tc, lambda));
}

}  // namespace wkl
