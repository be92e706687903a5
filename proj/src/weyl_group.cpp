#include "wkl/weyl_group.hpp"

#include <deque>
#include <stdexcept>

namespace wkl {

std::size_t WeylGroup::VecHash::operator()(const std::vector<int>& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

WeylGroup::WeylGroup(std::shared_ptr<const RootSystem> rs, std::size_t cap) : rs_(std::move(rs)) {
  const int n = rs_->rank();
  const int total = rs_->num_roots();

  WeylElt e;
  e.id = 0;
  e.images.resize(total);
  for (int r = 0; r < total; ++r) e.images[r] = r;
  index_.emplace(e.images, 0);
  elts_.push_back(std::move(e));

  for (std::size_t head = 0; head < elts_.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      std::vector<int> img(total);
      for (int r = 0; r < total; ++r) img[r] = elts_[head].images[rs_->reflect(i, r)];
      if (index_.count(img)) continue;
      if (elts_.size() >= cap)
        throw std::length_error("Weyl group of " + rs_->name() + " exceeds the cap of " + std::to_string(cap) +
                                " elements");
      WeylElt next;
      next.id = static_cast<int>(elts_.size());
      next.word = elts_[head].word;
      next.word.push_back(i);
      next.length = elts_[head].length + 1;
      index_.emplace(img, next.id);
      next.images = std::move(img);
      elts_.push_back(std::move(next));
    }
  }

  const int order = size();
  right_.assign(order, std::vector<int>(n));
  left_.assign(order, std::vector<int>(n));
  std::vector<int> img(total);
  for (int w = 0; w < order; ++w) {
    for (int i = 0; i < n; ++i) {
      for (int r = 0; r < total; ++r) img[r] = elts_[w].images[rs_->reflect(i, r)];
      right_[w][i] = index_.at(img);
      for (int r = 0; r < total; ++r) img[r] = rs_->reflect(i, elts_[w].images[r]);
      left_[w][i] = index_.at(img);
    }
  }
  inverse_.resize(order);
  for (int w = 0; w < order; ++w) {
    int x = 0;
    for (auto it = elts_[w].word.rbegin(); it != elts_[w].word.rend(); ++it) x = right_[x][*it];
    inverse_[w] = x;
  }
  reflection_.resize(total);
  for (int r = 0; r < total; ++r) {
    for (int x = 0; x < total; ++x) img[x] = rs_->reflect(r, x);
    reflection_[r] = index_.at(img);
  }
  for (int w = 0; w < order; ++w)
    if (elts_[w].length > elts_[longest_].length) longest_ = w;

  if (order <= 2048) dense_memo_.assign(static_cast<std::size_t>(order) * order, -1);
}

int WeylGroup::multiply(int v, int w) const {
  int x = v;
  for (int i : elts_[w].word) x = right_[x][i];
  return x;
}

int WeylGroup::from_word(std::span<const int> word) const {
  int x = 0;
  for (int i : word) {
    if (i < 0 || i >= rank()) throw std::out_of_range("from_word: simple index out of range");
    x = right_[x][i];
  }
  return x;
}

int WeylGroup::find(const std::vector<int>& images) const {
  auto it = index_.find(images);
  return it == index_.end() ? -1 : it->second;
}

Weight WeylGroup::act_on_weight(int w, const Weight& lambda) const {
  if (static_cast<int>(lambda.rank()) != rank()) throw std::invalid_argument("act_on_weight: rank mismatch");
  const WeylElt& winv = elts_[inverse_[w]];
  std::vector<Pairing> coords;
  coords.reserve(rank());
  for (int i = 0; i < rank(); ++i) coords.push_back(rs_->pair(winv.images[i], lambda));
  return Weight(std::move(coords), lambda.n_transcendentals());
}

int WeylGroup::cached(int v, int w) const {
  std::lock_guard<std::mutex> lock(memo_mutex_);
  if (!dense_memo_.empty()) return dense_memo_[static_cast<std::size_t>(v) * size() + w];
  auto it = sparse_memo_.find((static_cast<std::uint64_t>(v) << 32) | static_cast<std::uint32_t>(w));
  return it == sparse_memo_.end() ? -1 : static_cast<int>(it->second);
}

void WeylGroup::store(int v, int w, bool value) const {
  std::lock_guard<std::mutex> lock(memo_mutex_);
  if (!dense_memo_.empty()) {
    dense_memo_[static_cast<std::size_t>(v) * size() + w] = value ? 1 : 0;
  } else {
    sparse_memo_[(static_cast<std::uint64_t>(v) << 32) | static_cast<std::uint32_t>(w)] = value;
  }
}

bool WeylGroup::bruhat_leq(int v, int w) const {
  // Lifting property: with ws < w, v <= w iff (vs < v ? vs <= ws : v <= ws).
  // Every step is a tail call, so the visited pairs share one answer.
  std::vector<std::pair<int, int>> path;
  bool answer = false;
  for (;;) {
    if (v == w) {
      answer = true;
      break;
    }
    if (elts_[v].length >= elts_[w].length) {
      answer = false;
      break;
    }
    if (int c = cached(v, w); c >= 0) {
      answer = c == 1;
      break;
    }
    path.emplace_back(v, w);
    int s = 0;
    while (!is_right_descent(w, s)) ++s;
    if (is_right_descent(v, s)) v = right_[v][s];
    w = right_[w][s];
  }
  for (const auto& [a, b] : path) store(a, b, answer);
  return answer;
}

std::vector<int> WeylGroup::descents_right(int w) const {
  std::vector<int> out;
  for (int i = 0; i < rank(); ++i)
    if (is_right_descent(w, i)) out.push_back(i);
  return out;
}

std::vector<int> WeylGroup::inversion_set(int w) const {
  std::vector<int> out;
  for (int r = 0; r < rs_->num_positive(); ++r)
    if (!rs_->is_positive(elts_[w].images[r])) out.push_back(r);
  return out;
}

int WeylGroup::longest_element_of_parabolic(std::span<const int> simple) const {
  for (int i : simple)
    if (i < 0 || i >= rank()) throw std::out_of_range("longest_element_of_parabolic: simple index out of range");
  int x = 0;
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : simple) {
      if (!is_right_descent(x, i)) {
        x = right_[x][i];
        grew = true;
      }
    }
  }
  return x;
}

std::string WeylGroup::word_string(int w) const {
  if (elts_[w].word.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < elts_[w].word.size(); ++k) {
    if (k) s += " ";
    s += "s_" + RootSystem::simple_name(elts_[w].word[k]);
  }
  return s;
}

std::string WeylGroup::word_latex(int w) const {
  static const char* names[] = {"\\alpha", "\\beta", "\\gamma", "\\delta", "\\epsilon", "\\zeta"};
  if (elts_[w].word.empty()) return "1";
  std::string s;
  for (int i : elts_[w].word) s += std::string("s_{") + names[i] + "}";
  return s;
}

}  // namespace wkl
