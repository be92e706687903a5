#include "wkl/cosets.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <stdexcept>

namespace wkl {

SpaceTag next_space_tag() {
  static std::atomic<std::uint64_t> counter{0};
  return SpaceTag{++counter};
}

namespace {

std::string reflection_word(const RootSystem& rs, const std::vector<int>& roots, bool latex) {
  if (roots.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (latex) {
      s += "s_{" + rs.root_latex(roots[k]) + "}";
    } else {
      if (k) s += " ";
      const std::string name = rs.root_name(roots[k]);
      s += name.size() > 2 ? "s_{" + name + "}" : "s_" + name;
    }
  }
  return s;
}

// The positive root r with w = s_r, or -1.
int reflection_root(const WeylGroup& group, int w) {
  for (int r = 0; r < group.roots().num_positive(); ++r)
    if (group.reflection(r) == w) return r;
  return -1;
}

}  // namespace

// ---------------------------------------------------------------- ThetaCosets

ThetaCosets::ThetaCosets(std::shared_ptr<const WeylGroup> group, std::vector<int> theta)
    : group_(std::move(group)), theta_(std::move(theta)), tag_(next_space_tag()) {
  const WeylGroup& w = *group_;
  std::sort(theta_.begin(), theta_.end());
  theta_.erase(std::unique(theta_.begin(), theta_.end()), theta_.end());
  for (int i : theta_)
    if (i < 0 || i >= w.rank()) throw std::out_of_range("theta: simple index " + std::to_string(i) + " out of range");

  coset_of_.assign(w.size(), -1);
  for (int x = 0; x < w.size(); ++x) {
    if (coset_of_[x] >= 0) continue;
    // x is reached first in id order, so it is the shortest element.
    Coset c;
    c.id = static_cast<int>(cosets_.size());
    c.shortest = x;
    std::deque<int> queue{x};
    coset_of_[x] = c.id;
    while (!queue.empty()) {
      int y = queue.front();
      queue.pop_front();
      c.members.push_back(y);
      for (int i : theta_) {
        int z = w.left_simple(i, y);
        if (coset_of_[z] < 0) {
          coset_of_[z] = c.id;
          queue.push_back(z);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.longest = c.members.back();
    for (int y : c.members)
      if (w.length(y) > w.length(c.longest)) c.longest = y;
    cosets_.push_back(std::move(c));
  }

  steps_.assign(cosets_.size(), std::vector<CosetStep>(w.rank()));
  for (const Coset& c : cosets_) {
    for (int i = 0; i < w.rank(); ++i) {
      const int y = w.right_simple(c.longest, i);
      const int target = coset_of_[y];
      CosetMove move = CosetMove::Fix;
      if (target != c.id) move = w.length(y) > w.length(c.longest) ? CosetMove::Raise : CosetMove::Lower;
      steps_[c.id][i] = {move, target};
    }
  }
}

bool ThetaCosets::in_theta(int i) const { return std::binary_search(theta_.begin(), theta_.end(), i); }

bool ThetaCosets::is_shortest_rep(int w) const {
  const int winv = group_->inverse(w);
  for (int i : theta_)
    if (!group_->roots().is_positive(group_->act_on_root(winv, i))) return false;
  return true;
}

bool ThetaCosets::is_longest_rep(int w) const {
  const int winv = group_->inverse(w);
  for (int i : theta_)
    if (group_->roots().is_positive(group_->act_on_root(winv, i))) return false;
  return true;
}

std::string ThetaCosets::label(int c) const {
  const std::string word = group_->word_string(cosets_.at(c).longest);
  return theta_.empty() ? word : "W_Θ " + word;
}

ThetaCosets build_theta_cosets(std::shared_ptr<const WeylGroup> group, std::vector<int> theta) {
  return ThetaCosets(std::move(group), std::move(theta));
}

CosetStep coset_times_simple(const ThetaCosets& tc, int c, int i) {
  if (c < 0 || c >= tc.size()) throw std::out_of_range("coset id out of range");
  if (i < 0 || i >= tc.group().rank()) throw std::out_of_range("simple index out of range");
  return tc.step(c, i);
}

// --------------------------------------------------------- ReflectionSubgroup

ReflectionSubgroup::ReflectionSubgroup(std::shared_ptr<const WeylGroup> group, std::vector<int> simple_roots)
    : group_(std::move(group)), simple_(std::move(simple_roots)) {
  const WeylGroup& w = *group_;
  std::vector<int> gens;
  for (int r : simple_) {
    if (r < 0 || r >= w.roots().num_positive()) throw std::invalid_argument("reflection subgroup: generator is not a positive root");
    gens.push_back(w.reflection(r));
  }
  local_.assign(w.size(), -1);
  elements_.push_back(0);
  local_[0] = 0;
  length_.push_back(0);
  word_.emplace_back();
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const int y = w.multiply(elements_[head], gens[k]);
      if (local_[y] >= 0) continue;
      local_[y] = static_cast<int>(elements_.size());
      elements_.push_back(y);
      length_.push_back(length_[head] + 1);
      word_.push_back(word_[head]);
      word_.back().push_back(static_cast<int>(k));
    }
  }
  right_.assign(elements_.size(), std::vector<int>(gens.size()));
  for (std::size_t a = 0; a < elements_.size(); ++a)
    for (std::size_t k = 0; k < gens.size(); ++k) right_[a][k] = w.multiply(elements_[a], gens[k]);
  if (elements_.size() <= 4096) memo_.assign(elements_.size() * elements_.size(), -1);
}

int ReflectionSubgroup::generator_index(int root) const {
  auto it = std::find(simple_.begin(), simple_.end(), root);
  return it == simple_.end() ? -1 : static_cast<int>(it - simple_.begin());
}

bool ReflectionSubgroup::is_descent(int w, int k) const {
  return !group_->roots().is_positive(group_->act_on_root(w, simple_[k]));
}

int ReflectionSubgroup::cached(int a, int b) const {
  if (memo_.empty()) return -1;
  std::lock_guard<std::mutex> lock(memo_mutex_);
  return memo_[static_cast<std::size_t>(a) * elements_.size() + b];
}

void ReflectionSubgroup::store(int a, int b, bool value) const {
  if (memo_.empty()) return;
  std::lock_guard<std::mutex> lock(memo_mutex_);
  memo_[static_cast<std::size_t>(a) * elements_.size() + b] = value ? 1 : 0;
}

bool ReflectionSubgroup::bruhat_leq(int v, int w) const {
  if (!contains(v) || !contains(w)) throw std::invalid_argument("bruhat_leq: element outside the reflection subgroup");
  std::vector<std::pair<int, int>> path;
  bool answer = false;
  for (;;) {
    const int a = local_[v], b = local_[w];
    if (a == b) {
      answer = true;
      break;
    }
    if (length_[a] >= length_[b]) {
      answer = false;
      break;
    }
    if (int c = cached(a, b); c >= 0) {
      answer = c == 1;
      break;
    }
    path.emplace_back(a, b);
    int k = 0;
    while (!is_descent(w, k)) ++k;
    if (is_descent(v, k)) v = right_[a][k];
    w = right_[b][k];
  }
  for (const auto& [a, b] : path) store(a, b, answer);
  return answer;
}

// --------------------------------------------------------------- IntegralData

std::vector<int> simple_system(const RootSystem& rs, const std::vector<int>& sigma_pos) {
  std::vector<int> out;
  for (int b : sigma_pos) {
    bool simple = true;
    for (int g : sigma_pos) {
      if (g == b) continue;
      if (!rs.is_positive(rs.reflect(b, g))) {
        simple = false;
        break;
      }
    }
    if (simple) out.push_back(b);
  }
  return out;
}

bool IntegralData::is_integral_root(int r) const {
  return std::binary_search(sigma_lambda.begin(), sigma_lambda.end(), r);
}

bool IntegralData::in_pi_lambda(int r) const {
  return std::find(pi_lambda.begin(), pi_lambda.end(), r) != pi_lambda.end();
}

IntegralData integral_data(const ThetaCosets& tc, const Weight& lambda) {
  const WeylGroup& w = tc.group();
  const RootSystem& rs = w.roots();
  if (static_cast<int>(lambda.rank()) != rs.rank()) throw std::invalid_argument("integral_data: rank mismatch");

  IntegralData d;
  d.lambda = lambda;
  for (int r = 0; r < rs.num_roots(); ++r)
    if (classify(rs.pair(r, lambda)).is_integer()) d.sigma_lambda.push_back(r);
  for (int r : d.sigma_lambda)
    if (rs.is_positive(r)) d.sigma_lambda_pos.push_back(r);
  d.pi_lambda = simple_system(rs, d.sigma_lambda_pos);
  d.w_lambda = std::make_shared<const ReflectionSubgroup>(tc.group_ptr(), d.pi_lambda);

  for (int u = 0; u < w.size(); ++u) {
    const bool ok = std::all_of(d.sigma_lambda_pos.begin(), d.sigma_lambda_pos.end(),
                                [&](int b) { return rs.is_positive(w.act_on_root(u, b)); });
    if (!ok) continue;
    d.a_lambda.push_back(u);
    if (tc.is_shortest_rep(u)) d.a_theta_lambda.push_back(u);
  }
  if (d.a_lambda.size() * static_cast<std::size_t>(d.w_lambda->size()) != static_cast<std::size_t>(w.size()))
    throw std::logic_error("integral_data: |A_lambda| * |W_lambda| != |W|");

  std::vector<int> gens;
  for (int b : d.pi_lambda) gens.push_back(w.reflection(b));
  d.double_coset_of.assign(tc.size(), -1);
  for (std::size_t idx = 0; idx < d.a_theta_lambda.size(); ++idx) {
    const int start = tc.coset_of(d.a_theta_lambda[idx]);
    if (d.double_coset_of[start] >= 0)
      throw std::logic_error("integral_data: two elements of A_Theta,lambda share a double coset");
    std::vector<int> members{start};
    d.double_coset_of[start] = static_cast<int>(idx);
    for (std::size_t h = 0; h < members.size(); ++h) {
      for (int g : gens) {
        const int c = tc.times(members[h], g);
        if (d.double_coset_of[c] < 0) {
          d.double_coset_of[c] = static_cast<int>(idx);
          members.push_back(c);
        } else if (d.double_coset_of[c] != static_cast<int>(idx)) {
          throw std::logic_error("integral_data: two elements of A_Theta,lambda share a double coset");
        }
      }
    }
    std::sort(members.begin(), members.end());
    d.double_cosets.push_back(std::move(members));
  }
  if (std::find(d.double_coset_of.begin(), d.double_coset_of.end(), -1) != d.double_coset_of.end())
    throw std::logic_error("integral_data: A_Theta,lambda misses a double coset");
  return d;
}

// -------------------------------------------------------------- IntegralModel

int IntegralModel::coset_of(int w) const {
  if (w < 0 || w >= group_->size() || !w_lambda_->contains(w))
    throw std::invalid_argument("integral model: element outside W_lambda");
  return coset_of_[w_lambda_->local_index(w)];
}

CosetStep IntegralModel::step(int e, int alpha_root) const {
  const int k = w_lambda_->generator_index(alpha_root);
  if (k < 0) throw std::invalid_argument("integral model: root is not in Pi_lambda");
  return steps_.at(e)[k];
}

int IntegralModel::restrict(int c) const {
  if (c < 0 || c >= n_global_) throw std::out_of_range("coset id out of range");
  const auto it = restrict_.find(c);
  return it == restrict_.end() ? -1 : it->second;
}

std::string IntegralModel::label(int e) const {
  if (int r = reflection_root(*group_, cosets_.at(e).longest); r >= 0)
    return reflection_word(group_->roots(), {r}, false);
  std::vector<int> roots;
  for (int k : w_lambda_->word(cosets_.at(e).longest)) roots.push_back(w_lambda_->simple_roots()[k]);
  return reflection_word(group_->roots(), roots, false);
}

std::string IntegralModel::label_latex(int e) const {
  if (int r = reflection_root(*group_, cosets_.at(e).longest); r >= 0)
    return reflection_word(group_->roots(), {r}, true);
  std::vector<int> roots;
  for (int k : w_lambda_->word(cosets_.at(e).longest)) roots.push_back(w_lambda_->simple_roots()[k]);
  return reflection_word(group_->roots(), roots, true);
}

IntegralModel build_integral_model(const ThetaCosets& tc, const IntegralData& idata, int u) {
  const WeylGroup& w = tc.group();
  const RootSystem& rs = w.roots();
  if (!std::binary_search(idata.a_theta_lambda.begin(), idata.a_theta_lambda.end(), u))
    throw std::invalid_argument("integral model: u is not in A_Theta,lambda");

  IntegralModel m;
  m.u_ = u;
  m.lambda_ = idata.lambda;
  m.w_lambda_ = idata.w_lambda;
  m.group_ = tc.group_ptr();
  m.tag_ = next_space_tag();
  const ReflectionSubgroup& sub = *idata.w_lambda;
  for (int b : idata.pi_lambda)
    if (rs.supported_in(w.act_on_root(u, b), tc.theta())) m.theta_.push_back(b);

  std::vector<int> left_gens;
  for (int b : m.theta_) left_gens.push_back(w.reflection(b));
  m.coset_of_.assign(sub.size(), -1);
  for (int v : sub.elements()) {
    if (m.coset_of_[sub.local_index(v)] >= 0) continue;
    ModelCoset c;
    c.id = static_cast<int>(m.cosets_.size());
    c.members.push_back(v);
    m.coset_of_[sub.local_index(v)] = c.id;
    for (std::size_t h = 0; h < c.members.size(); ++h) {
      for (int g : left_gens) {
        const int y = w.multiply(g, c.members[h]);
        if (m.coset_of_[sub.local_index(y)] < 0) {
          m.coset_of_[sub.local_index(y)] = c.id;
          c.members.push_back(y);
        }
      }
    }
    c.longest = v;
    for (int y : c.members)
      if (sub.length(y) > sub.length(c.longest)) c.longest = y;
    c.length = sub.length(c.longest);
    std::sort(c.members.begin(), c.members.end());
    m.cosets_.push_back(std::move(c));
  }

  const int ngen = static_cast<int>(idata.pi_lambda.size());
  m.steps_.assign(m.cosets_.size(), std::vector<CosetStep>(ngen));
  for (const ModelCoset& c : m.cosets_) {
    for (int k = 0; k < ngen; ++k) {
      const int y = sub.times_generator(c.longest, k);
      const int target = m.coset_of_[sub.local_index(y)];
      CosetMove move = CosetMove::Fix;
      if (target != c.id) move = sub.length(y) > c.length ? CosetMove::Raise : CosetMove::Lower;
      m.steps_[c.id][k] = {move, target};
    }
  }

  const int n = m.size();
  m.order_.assign(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.order_[a][b] = sub.bruhat_leq(m.cosets_[a].longest, m.cosets_[b].longest);

  const int block = idata.double_coset_of[tc.coset_of(u)];
  m.n_global_ = tc.size();
  m.ind_.resize(n);
  for (int e = 0; e < n; ++e) {
    const int c = tc.coset_of(w.multiply(u, m.cosets_[e].longest));
    if (idata.double_coset_of[c] != block || m.restrict_.count(c))
      throw std::logic_error("integral model: ind is not a bijection onto the double coset");
    m.ind_[e] = c;
    m.restrict_[c] = e;
  }
  if (static_cast<std::size_t>(n) != idata.double_cosets[block].size())
    throw std::logic_error("integral model: ind is not a bijection onto the double coset");
  return m;
}

std::vector<IntegralModel> build_all_models(const ThetaCosets& tc, const IntegralData& idata) {
  std::vector<IntegralModel> out;
  for (int u : idata.a_theta_lambda) out.push_back(build_integral_model(tc, idata, u));
  return out;
}

ConjugatedModel conjugate_model(const ThetaCosets& tc, const IntegralModel& model, int beta) {
  const WeylGroup& w = tc.group();
  const RootSystem& rs = w.roots();
  if (beta < 0 || beta >= rs.rank()) throw std::out_of_range("conjugate_model: simple index out of range");
  if (classify(rs.pair(beta, model.lambda())).is_integer())
    throw std::invalid_argument("conjugate_model: " + rs.root_name(beta) + " is integral for lambda");

  const int sb = w.reflection(beta);
  IntegralData data = integral_data(tc, w.act_on_weight(sb, model.lambda()));
  const int r = data.double_coset_rep(tc.coset_of(w.multiply(model.u(), sb)));
  IntegralModel next = build_integral_model(tc, data, r);
  if (next.size() != model.size()) throw std::logic_error("conjugate_model: model sizes differ");

  std::vector<int> to_new(model.size(), -1), to_old(model.size(), -1);
  for (int e = 0; e < model.size(); ++e) {
    int target = -1;
    for (int v : model.coset(e).members) {
      const int f = next.coset_of(w.multiply(w.multiply(sb, v), sb));
      if (target >= 0 && f != target) throw std::logic_error("conjugate_model: conjugation does not preserve cosets");
      target = f;
    }
    if (to_old[target] >= 0) throw std::logic_error("conjugate_model: conjugation is not injective");
    to_new[e] = target;
    to_old[target] = e;
  }
  return ConjugatedModel{beta, std::move(data), r, std::move(next), std::move(to_new), std::move(to_old)};
}

DescentChain descent_chain(const ThetaCosets& tc, const IntegralData& idata, int c) {
  const WeylGroup& w = tc.group();
  const RootSystem& rs = w.roots();
  if (c < 0 || c >= tc.size()) throw std::out_of_range("descent_chain: coset id out of range");
  if (tc.coset_of(idata.double_coset_rep(c)) == c)
    throw std::invalid_argument("descent_chain: C is the smallest coset W_Theta u of its double coset");

  DescentChain out;
  int z = 0;
  int d = c;
  Weight lam = idata.lambda;
  while (true) {
    int nonintegral = -1;
    for (int i = 0; i < rs.rank(); ++i) {
      if (tc.step(d, i).move != CosetMove::Lower) continue;
      if (classify(rs.pair(i, lam)).is_integer()) {
        out.alpha = w.act_on_root(z, i);
        if (!idata.in_pi_lambda(out.alpha)) throw std::logic_error("descent_chain: descent root is not in Pi_lambda");
        return out;
      }
      if (nonintegral < 0) nonintegral = i;
    }
    if (nonintegral < 0) throw std::logic_error("descent_chain: no descent found");
    out.chain.push_back(nonintegral);
    z = w.right_simple(z, nonintegral);
    lam = w.act_on_weight(w.reflection(nonintegral), lam);
    d = tc.step(d, nonintegral).target;
  }
}

StabilizerData stabilizer_data(const ThetaCosets& tc, const Weight& lambda) {
  const WeylGroup& w = tc.group();
  const RootSystem& rs = w.roots();
  if (auto bad = rs.antidominance_violation(lambda, true))
    throw std::invalid_argument("lambda not antidominant: " + rs.root_name(*bad) +
                                "^vee(lambda) = " + classify(rs.pair(*bad, lambda)).value.str());

  StabilizerData s;
  for (int x = 0; x < w.size(); ++x)
    if (w.act_on_weight(x, lambda) == lambda) s.stabilizer.push_back(x);
  std::vector<int> singular_pos;
  for (int r = 0; r < rs.num_roots(); ++r) {
    if (!rs.pair(r, lambda).is_zero()) continue;
    s.singular_roots.push_back(r);
    if (rs.is_positive(r)) singular_pos.push_back(r);
  }
  ReflectionSubgroup generated(tc.group_ptr(), simple_system(rs, singular_pos));
  std::vector<int> gen_ids = generated.elements();
  std::sort(gen_ids.begin(), gen_ids.end());
  if (gen_ids != s.stabilizer) throw std::logic_error("stabilizer_data: W^lambda differs from the reflection subgroup of its roots");

  for (int u = 0; u < w.size(); ++u) {
    if (!tc.is_shortest_rep(u)) continue;
    const bool ok = std::all_of(singular_pos.begin(), singular_pos.end(),
                                [&](int b) { return rs.is_positive(w.act_on_root(u, b)); });
    if (ok) s.a_theta_stab.push_back(u);
  }

  s.double_coset_of.assign(tc.size(), -1);
  for (std::size_t idx = 0; idx < s.a_theta_stab.size(); ++idx) {
    std::vector<int> members{tc.coset_of(s.a_theta_stab[idx])};
    if (s.double_coset_of[members[0]] >= 0) throw std::logic_error("stabilizer_data: A_Theta^lambda is not a cross-section");
    s.double_coset_of[members[0]] = static_cast<int>(idx);
    for (std::size_t h = 0; h < members.size(); ++h) {
      for (int x : s.stabilizer) {
        const int c = tc.times(members[h], x);
        if (s.double_coset_of[c] < 0) {
          s.double_coset_of[c] = static_cast<int>(idx);
          members.push_back(c);
        } else if (s.double_coset_of[c] != static_cast<int>(idx)) {
          throw std::logic_error("stabilizer_data: A_Theta^lambda is not a cross-section");
        }
      }
    }
  }
  if (std::find(s.double_coset_of.begin(), s.double_coset_of.end(), -1) != s.double_coset_of.end())
    throw std::logic_error("stabilizer_data: A_Theta^lambda is not a cross-section");
  return s;
}

}  // namespace wkl
