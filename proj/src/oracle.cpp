#include "wkl/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace wkl {

bool bruhat_subword(const WeylGroup& group, int v, int w) {
  const std::vector<int>& word = group.word(w);
  if (word.size() > 12) throw std::length_error("bruhat_subword: word longer than 12");
  const int target_len = group.length(v);
  const unsigned n = static_cast<unsigned>(word.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != target_len) continue;
    int x = 0;
    for (unsigned k = 0; k < n; ++k)
      if (mask & (1u << k)) x = group.right_simple(x, word[k]);
    if (x == v && group.length(x) == target_len) return true;
  }
  return false;
}

ClassicalKL classical_kl(const WeylGroup& group) {
  const int n = group.size();
  if (n > 1152) throw std::length_error("classical_kl: group larger than 1152");
  auto at = [n](int x, int y) { return static_cast<std::size_t>(x) * n + y; };

  // R_{x,w}: with s a right descent of w,
  //   R_{x,w} = R_{xs,ws} if xs < x, else (q-1) R_{x,ws} + q R_{xs,ws}.
  std::vector<LaurentPoly> r(static_cast<std::size_t>(n) * n);
  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly qm1 = q - LaurentPoly(1);
  for (int w = 0; w < n; ++w) {
    if (w == 0) {
      r[at(0, 0)] = LaurentPoly(1);
      continue;
    }
    int s = 0;
    while (!group.is_right_descent(w, s)) ++s;
    const int ws = group.right_simple(w, s);
    for (int x = 0; x < n; ++x) {
      const int xs = group.right_simple(x, s);
      if (group.is_right_descent(x, s)) {
        r[at(x, w)] = r[at(xs, ws)];
      } else {
        r[at(x, w)] = qm1 * r[at(x, ws)] + q * r[at(xs, ws)];
      }
    }
  }

  // q^{d} P_{x,w}(q^{-1}) - P_{x,w}(q) = sum_{x<y<=w} R_{x,y} P_{y,w} with
  // deg P_{x,w} <= (d-1)/2, so P_{x,w} is minus the low-degree part.
  ClassicalKL out;
  out.order = n;
  out.table.assign(static_cast<std::size_t>(n) * n, LaurentPoly());
  std::vector<int> by_length(n);
  for (int x = 0; x < n; ++x) by_length[x] = x;
  std::stable_sort(by_length.begin(), by_length.end(), [&](int a, int b) { return group.length(a) > group.length(b); });
  for (int w = 0; w < n; ++w) {
    out.table[at(w, w)] = LaurentPoly(1);
    std::vector<int> below;  // y <= w, longest first
    for (int y : by_length)
      if (!r[at(y, w)].is_zero()) below.push_back(y);
    for (std::size_t i = 0; i < below.size(); ++i) {
      const int x = below[i];
      if (x == w) continue;
      LaurentPoly sum;
      for (std::size_t j = 0; j < i; ++j) {
        const int y = below[j];
        if (group.length(y) <= group.length(x)) continue;
        const LaurentPoly& rxy = r[at(x, y)];
        if (rxy.is_zero()) continue;
        sum += rxy * out.table[at(y, w)];
      }
      const int d = group.length(w) - group.length(x);
      out.table[at(x, w)] = -sum.truncated_at_most((d - 1) / 2);
    }
  }
  return out;
}

std::vector<std::vector<bool>> reflection_chain_order(const ReflectionSubgroup& sub,
                                                      const std::vector<int>& positive_roots) {
  const WeylGroup& group = sub.group();
  const int n = sub.size();
  std::vector<int> refl;
  for (int r : positive_roots) refl.push_back(group.reflection(r));
  // up[a] = elements reachable by one reflection with larger length.
  std::vector<std::vector<int>> up(n);
  for (int a = 0; a < n; ++a) {
    const int v = sub.elements()[a];
    for (int t : refl) {
      const int y = group.multiply(v, t);
      if (!sub.contains(y)) throw std::logic_error("reflection_chain_order: reflection leaves the subgroup");
      if (sub.length(y) > sub.length(v)) up[a].push_back(sub.local_index(y));
    }
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    std::vector<int> stack{a};
    leq[a][a] = true;
    while (!stack.empty()) {
      const int b = stack.back();
      stack.pop_back();
      for (int c : up[b])
        if (!leq[a][c]) {
          leq[a][c] = true;
          stack.push_back(c);
        }
    }
  }
  return leq;
}

std::vector<int> standard_module_grouping(const ThetaCosets& tc, const Weight& lambda) {
  const WeylGroup& group = tc.group();
  std::vector<int> theta_group;
  for (int x = 0; x < group.size(); ++x)
    if (tc.coset_of(x) == tc.identity_coset()) theta_group.push_back(x);
  std::map<std::set<Weight>, int> seen;
  std::vector<int> out(tc.size());
  for (int c = 0; c < tc.size(); ++c) {
    const Weight mu = group.act_on_weight(tc.coset(c).longest, lambda);
    std::set<Weight> orbit;
    for (int x : theta_group) orbit.insert(group.act_on_weight(x, mu));
    out[c] = seen.emplace(std::move(orbit), c).first->second;
  }
  return out;
}

bool OracleReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.pass; });
}

void OracleReport::add(std::string name, std::string scope, bool pass, std::string counterexample) {
  checks.push_back(OracleCheck{std::move(name), std::move(scope), pass, std::move(counterexample)});
}

namespace {

Weight difference(const Weight& a, const Weight& b) {
  std::vector<Pairing> coords;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    Pairing p = a.coord(i);
    p += -b.coord(i);
    coords.push_back(std::move(p));
  }
  return Weight(std::move(coords), a.n_transcendentals());
}

std::string ids(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "}";
}

}  // namespace

OracleReport recompute_cosets(const ThetaCosets& tc, const Weight& lambda) {
  const WeylGroup& group = tc.group();
  const RootSystem& rs = group.roots();
  const std::string scope = rs.name() + " lambda=" + lambda.to_string();
  OracleReport report;
  const int n = group.size();

  // W_Theta as the closure of its generators.
  std::set<int> w_theta{0};
  for (bool grew = true; grew;) {
    grew = false;
    for (int x : std::vector<int>(w_theta.begin(), w_theta.end()))
      for (int i : tc.theta())
        grew |= w_theta.insert(group.left_simple(i, x)).second;
  }
  {
    std::string bad;
    for (int w = 0; w < n && bad.empty(); ++w) {
      std::vector<int> coset;
      for (int x : w_theta) coset.push_back(group.multiply(x, w));
      std::sort(coset.begin(), coset.end());
      if (coset != tc.coset(tc.coset_of(w)).members) bad = "w=" + std::to_string(w);
    }
    report.add("right W_Theta-cosets", scope, bad.empty(), bad);
  }

  IntegralData idata = integral_data(tc, lambda);

  // Sigma_lambda by pairing, W_lambda by the root lattice criterion.
  std::set<int> sigma_pos;
  for (int r = 0; r < rs.num_positive(); ++r)
    if (classify(rs.pair(r, lambda)).is_integer()) sigma_pos.insert(r);
  report.add("positive integral roots", scope,
             std::vector<int>(sigma_pos.begin(), sigma_pos.end()) == idata.sigma_lambda_pos);
  std::vector<int> w_lambda;
  for (int w = 0; w < n; ++w)
    if (rs.in_root_lattice(difference(group.act_on_weight(w, lambda), lambda))) w_lambda.push_back(w);
  {
    std::vector<int> prod(idata.w_lambda->elements());
    std::sort(prod.begin(), prod.end());
    report.add("W_lambda equals {w : w lambda - lambda in Z Sigma}", scope, prod == w_lambda,
               prod == w_lambda ? "" : ids(prod) + " vs " + ids(w_lambda));
  }

  std::vector<int> a_lambda;
  for (int u = 0; u < n; ++u) {
    const std::vector<int> inv = group.inversion_set(u);
    if (std::none_of(inv.begin(), inv.end(), [&](int r) { return sigma_pos.count(r) > 0; })) a_lambda.push_back(u);
  }
  report.add("A_lambda", scope, a_lambda == idata.a_lambda,
             a_lambda == idata.a_lambda ? "" : ids(a_lambda) + " vs " + ids(idata.a_lambda));

  // Double cosets as explicit element sets; their shortest members.
  std::vector<int> block_of(n, -1);
  std::vector<int> shortest;
  for (int w = 0; w < n; ++w) {
    if (block_of[w] >= 0) continue;
    const int b = static_cast<int>(shortest.size());
    int best = w;
    for (int x : w_theta)
      for (int y : w_lambda) {
        const int z = group.multiply(group.multiply(x, w), y);
        block_of[z] = b;
        if (group.length(z) < group.length(best)) best = z;
      }
    shortest.push_back(best);
  }
  std::vector<int> sorted_shortest(shortest);
  std::sort(sorted_shortest.begin(), sorted_shortest.end());
  report.add("A_Theta,lambda", scope, sorted_shortest == idata.a_theta_lambda,
             sorted_shortest == idata.a_theta_lambda ? "" : ids(sorted_shortest) + " vs " + ids(idata.a_theta_lambda));
  {
    std::string bad;
    for (int w = 0; w < n && bad.empty(); ++w) {
      const int rep = idata.double_coset_rep(tc.coset_of(w));
      if (block_of[rep] != block_of[w]) bad = "w=" + std::to_string(w);
    }
    report.add("double coset partition", scope, bad.empty(), bad);
  }

  // Bruhat order of W_lambda against reflection chains.
  {
    const auto chain = reflection_chain_order(*idata.w_lambda, idata.sigma_lambda_pos);
    std::string bad;
    const auto& elems = idata.w_lambda->elements();
    for (std::size_t a = 0; a < elems.size() && bad.empty(); ++a)
      for (std::size_t b = 0; b < elems.size() && bad.empty(); ++b)
        if (chain[a][b] != idata.w_lambda->bruhat_leq(elems[a], elems[b]))
          bad = "v=" + std::to_string(elems[a]) + " w=" + std::to_string(elems[b]);
    report.add("Bruhat order of W_lambda", scope, bad.empty(), bad);
  }

  for (int u : idata.a_theta_lambda) {
    const std::string mscope = scope + " u=" + std::to_string(u);
    const IntegralModel model = build_integral_model(tc, idata, u);
    std::vector<int> theta_u;
    for (int b : idata.pi_lambda) {
      const int ub = group.act_on_root(u, b);
      bool in_sigma_theta = true;
      for (int j = 0; j < rs.rank(); ++j)
        if (rs.root(ub)[j] != 0 && std::find(tc.theta().begin(), tc.theta().end(), j) == tc.theta().end())
          in_sigma_theta = false;
      if (in_sigma_theta) theta_u.push_back(b);
    }
    report.add("Theta(u,lambda)", mscope, theta_u == model.theta(),
               theta_u == model.theta() ? "" : ids(theta_u) + " vs " + ids(model.theta()));

    std::string bad;
    std::set<int> image;
    for (int e = 0; e < model.size() && bad.empty(); ++e) {
      for (int v : model.coset(e).members)
        if (tc.coset_of(group.multiply(u, v)) != model.ind(e)) bad = "E=" + std::to_string(e) + " v=" + std::to_string(v);
      image.insert(model.ind(e));
    }
    for (int c = 0; c < tc.size() && bad.empty(); ++c) {
      const bool inside = block_of[tc.coset(c).shortest] == block_of[u];
      if (inside != (image.count(c) > 0)) bad = "C=" + std::to_string(c);
    }
    report.add("ind is a bijection onto the double coset", mscope, bad.empty(), bad);

    bad.clear();
    for (int e = 0; e < model.size() && bad.empty(); ++e)
      for (int f = 0; f < model.size() && bad.empty(); ++f)
        if (model.leq(e, f) && !tc.leq(model.ind(e), model.ind(f)))
          bad = "E=" + std::to_string(e) + " F=" + std::to_string(f);
    report.add("ind preserves order", mscope, bad.empty(), bad);
  }
  return report;
}

namespace {

std::vector<int> integral_roots(const RootSystem& rs, const Weight& lambda, bool positive_only) {
  std::vector<int> out;
  const int n = positive_only ? rs.num_positive() : rs.num_roots();
  for (int r = 0; r < n; ++r)
    if (classify(rs.pair(r, lambda)).is_integer()) out.push_back(r);
  return out;
}

std::vector<int> image_of(const WeylGroup& group, int u, const std::vector<int>& roots) {
  std::vector<int> out;
  for (int r : roots) out.push_back(group.act_on_root(u, r));
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

OracleReport structural_properties(const ThetaCosets& tc, const Weight& lambda) {
  const WeylGroup& group = tc.group();
  const RootSystem& rs = group.roots();
  const std::string scope = rs.name() + " Theta=" + ids(tc.theta()) + " lambda=" + lambda.to_string();
  OracleReport report;
  const IntegralData idata = integral_data(tc, lambda);

  // Integral systems moved by u in A_lambda.
  {
    std::string bad[6];
    for (int u : idata.a_lambda) {
      const Weight ul = group.act_on_weight(u, lambda);
      const IntegralData ud = integral_data(tc, ul);
      const std::string at = "u=" + group.word_string(u);
      if (bad[0].empty() && image_of(group, u, idata.sigma_lambda) != integral_roots(rs, ul, false)) bad[0] = at;
      if (bad[1].empty() && image_of(group, u, idata.sigma_lambda_pos) != ud.sigma_lambda_pos) bad[1] = at;
      if (bad[2].empty() && image_of(group, u, idata.pi_lambda) != [&] {
            std::vector<int> p(ud.pi_lambda);
            std::sort(p.begin(), p.end());
            return p;
          }())
        bad[2] = at;
      if (bad[3].empty()) {
        std::vector<int> conj;
        for (int v : idata.w_lambda->elements()) conj.push_back(group.multiply(group.multiply(u, v), group.inverse(u)));
        std::sort(conj.begin(), conj.end());
        std::vector<int> target(ud.w_lambda->elements());
        std::sort(target.begin(), target.end());
        if (conj != target) bad[3] = at;
      }
      for (int b = 0; b < rs.rank() && bad[5].empty(); ++b) {
        if (!contains(idata.a_lambda, group.reflection(b))) continue;
        const IntegralData sd = integral_data(tc, group.act_on_weight(group.reflection(b), lambda));
        if (!contains(sd.a_lambda, group.right_simple(u, b))) bad[5] = at + " beta=" + rs.root_name(b);
      }
    }
    for (int b = 0; b < rs.rank() && bad[4].empty(); ++b)
      if (contains(idata.a_lambda, group.reflection(b)) != !idata.in_pi_lambda(b)) bad[4] = "beta=" + rs.root_name(b);
    const char* names[6] = {"u Sigma_lambda = Sigma_{u lambda}", "u Sigma_lambda^+ = Sigma_{u lambda}^+",
                            "u Pi_lambda = Pi_{u lambda}", "u W_lambda u^-1 = W_{u lambda}",
                            "s_beta in A_lambda iff beta non-integral", "u s_beta in A_{s_beta lambda}"};
    for (int k = 0; k < 6; ++k) report.add(names[k], scope, bad[k].empty(), bad[k]);
  }

  // v <=_lambda w in W_lambda implies uv <= uw.
  {
    std::string bad;
    const ReflectionSubgroup& sub = *idata.w_lambda;
    for (int u : idata.a_lambda)
      for (int v : sub.elements())
        for (int w : sub.elements()) {
          if (!bad.empty()) break;
          if (sub.bruhat_leq(v, w) && !group.bruhat_leq(group.multiply(u, v), group.multiply(u, w)))
            bad = "u=" + group.word_string(u) + " v=" + group.word_string(v) + " w=" + group.word_string(w);
        }
    report.add("u W_lambda is Bruhat compatible", scope, bad.empty(), bad);
  }

  // s_alpha u lies in A_lambda or in u W_lambda.
  {
    std::string bad;
    for (int u : idata.a_lambda)
      for (int a = 0; a < rs.rank() && bad.empty(); ++a) {
        const int su = group.left_simple(a, u);
        const int rel = group.multiply(group.inverse(u), su);
        if (!contains(idata.a_lambda, su) && !idata.w_lambda->contains(rel))
          bad = "u=" + group.word_string(u) + " alpha=" + rs.root_name(a);
      }
    report.add("s_alpha u in A_lambda or u W_lambda", scope, bad.empty(), bad);
  }

  // Each double coset has a unique smallest right coset containing its part of A_lambda.
  {
    std::string bad;
    for (std::size_t b = 0; b < idata.double_cosets.size() && bad.empty(); ++b) {
      const std::vector<int>& cs = idata.double_cosets[b];
      std::vector<int> minimal;
      for (int c : cs)
        if (std::none_of(cs.begin(), cs.end(), [&](int d) { return tc.less(d, c); })) minimal.push_back(c);
      const std::string at = "u=" + group.word_string(idata.a_theta_lambda[b]);
      if (minimal.size() != 1) {
        bad = at + " minimal cosets " + ids(minimal);
        break;
      }
      const int m = minimal.front();
      if (std::any_of(cs.begin(), cs.end(), [&](int d) { return !tc.leq(m, d); })) bad = at + " minimum not below all";
      for (int u : idata.a_lambda)
        if (idata.double_coset_of[tc.coset_of(u)] == static_cast<int>(b) && tc.coset_of(u) != m)
          bad = at + " A_lambda element " + group.word_string(u) + " outside the minimum";
      if (!contains(idata.a_lambda, tc.coset(m).shortest)) bad = at + " shortest element not in A_lambda";
    }
    report.add("unique smallest right coset", scope, bad.empty(), bad);
  }

  const std::vector<IntegralModel> models = build_all_models(tc, idata);

  // Conjugation by non-integral simple reflections.
  {
    std::string square, order, twice;
    for (const IntegralModel& m : models)
      for (int b = 0; b < rs.rank(); ++b) {
        if (idata.in_pi_lambda(b)) continue;
        const ConjugatedModel cm = conjugate_model(tc, m, b);
        const int sb = group.reflection(b);
        const std::string at = "u=" + group.word_string(m.u()) + " beta=" + rs.root_name(b);
        for (int e = 0; e < m.size(); ++e) {
          if (square.empty() && cm.model.ind(cm.to_new[e]) != tc.times(m.ind(e), sb)) square = at;
          for (int f = 0; f < m.size(); ++f)
            if (order.empty() && m.leq(e, f) != cm.model.leq(cm.to_new[e], cm.to_new[f])) order = at;
        }
        const ConjugatedModel back = conjugate_model(tc, cm.model, b);
        bool same = back.model.u() == m.u() && back.data.lambda == lambda;
        for (int e = 0; e < m.size(); ++e) same = same && back.to_new[cm.to_new[e]] == e;
        if (twice.empty() && !same) twice = at;
      }
    report.add("conjugation commutes with ind", scope, square.empty(), square);
    report.add("conjugation preserves model order", scope, order.empty(), order);
    report.add("conjugating twice is the identity", scope, twice.empty(), twice);
  }

  // Descent chains: (a) each beta_{i+1} non-integral for z_i^-1 lambda;
  // (b) z^-1 alpha in Pi and Pi_{z^-1 lambda}; (c) C s_alpha <_{u,lambda} C;
  // (d) C z < C when the chain is non-empty; (e) C s_alpha z < C z.
  {
    std::string bad[5];
    for (int c = 0; c < tc.size(); ++c) {
      const int block = idata.double_coset_of[c];
      if (tc.coset_of(idata.a_theta_lambda[block]) == c) continue;
      const DescentChain dc = descent_chain(tc, idata, c);
      const std::string at = "C=" + tc.label(c);
      int z = 0;
      Weight mu = lambda;
      for (int bi : dc.chain) {
        if (bad[0].empty() && classify(rs.pair(bi, mu)).is_integer()) bad[0] = at;
        mu = group.act_on_weight(group.reflection(bi), mu);
        z = group.right_simple(z, bi);
      }
      const int za = group.act_on_root(group.inverse(z), dc.alpha);
      if (bad[1].empty() && (za >= rs.rank() || !integral_data(tc, mu).in_pi_lambda(za))) bad[1] = at;
      const int sa = group.reflection(dc.alpha);
      const IntegralModel& m = models[block];
      const int csa = tc.times(c, sa);
      if (bad[2].empty() && (m.restrict(csa) < 0 || !m.less(m.restrict(csa), m.restrict(c)))) bad[2] = at;
      if (bad[3].empty() && !dc.chain.empty() && !tc.less(tc.times(c, z), c)) bad[3] = at;
      if (bad[4].empty() && !tc.less(tc.times(csa, z), tc.times(c, z))) bad[4] = at;
    }
    const char* names[5] = {"descent chain (a) non-integral steps", "descent chain (b) simple integral root",
                            "descent chain (c) model descent", "descent chain (d) C z < C",
                            "descent chain (e) C s_alpha z < C z"};
    for (int k = 0; k < 5; ++k) report.add(names[k], scope, bad[k].empty(), bad[k]);
  }
  return report;
}

}  // namespace wkl
