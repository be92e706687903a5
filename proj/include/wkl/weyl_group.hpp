#pragma once

#include "wkl/root_system.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace wkl {

struct WeylElt {
  int id = 0;
  std::vector<int> images;  // w(root r) for every root index r
  std::vector<int> word;    // reduced expression, w = s_{word[0]} s_{word[1]} ...
  int length = 0;
};

// The Weyl group of a root system, enumerated breadth-first from the
// identity by right multiplication with simple reflections taken in index
// order. Element ids are therefore deterministic and sorted by length.
class WeylGroup {
 public:
  static constexpr std::size_t kMaxOrder = 51840;

  explicit WeylGroup(std::shared_ptr<const RootSystem> rs, std::size_t cap = kMaxOrder);

  static std::shared_ptr<const WeylGroup> enumerate(const RootSystem& rs) {
    return std::make_shared<const WeylGroup>(std::make_shared<const RootSystem>(rs));
  }

  const RootSystem& roots() const { return *rs_; }
  std::shared_ptr<const RootSystem> roots_ptr() const { return rs_; }
  int rank() const { return rs_->rank(); }
  int size() const { return static_cast<int>(elts_.size()); }
  int identity() const { return 0; }
  int longest() const { return longest_; }

  const WeylElt& element(int w) const { return elts_.at(w); }
  int length(int w) const { return elts_[w].length; }
  const std::vector<int>& word(int w) const { return elts_[w].word; }

  int right_simple(int w, int i) const { return right_[w][i]; }  // w s_i
  int left_simple(int i, int w) const { return left_[w][i]; }    // s_i w
  int multiply(int v, int w) const;
  int inverse(int w) const { return inverse_[w]; }
  int from_word(std::span<const int> word) const;
  // s_r for an arbitrary root r.
  int reflection(int r) const { return reflection_[r]; }
  int find(const std::vector<int>& images) const;

  int act_on_root(int w, int r) const { return elts_[w].images[r]; }
  Weight act_on_weight(int w, const Weight& lambda) const;

  bool bruhat_leq(int v, int w) const;
  bool bruhat_less(int v, int w) const { return v != w && bruhat_leq(v, w); }

  std::vector<int> descents_right(int w) const;
  // Positive roots sent to negative roots by w.
  std::vector<int> inversion_set(int w) const;
  bool is_right_descent(int w, int i) const { return !rs_->is_positive(elts_[w].images[i]); }
  bool is_left_descent(int i, int w) const { return !rs_->is_positive(elts_[inverse_[w]].images[i]); }

  int longest_element_of_parabolic(std::span<const int> simple) const;

  std::string word_string(int w) const;
  std::string word_latex(int w) const;

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept;
  };

  int cached(int v, int w) const;
  void store(int v, int w, bool value) const;

  std::shared_ptr<const RootSystem> rs_;
  std::vector<WeylElt> elts_;
  std::unordered_map<std::vector<int>, int, VecHash> index_;
  std::vector<std::vector<int>> right_;
  std::vector<std::vector<int>> left_;
  std::vector<int> inverse_;
  std::vector<int> reflection_;
  int longest_ = 0;

  // Bruhat memo: dense for small groups, hashed otherwise.
  mutable std::mutex memo_mutex_;
  mutable std::vector<std::int8_t> dense_memo_;
  mutable std::unordered_map<std::uint64_t, bool> sparse_memo_;
};

}  // namespace wkl
