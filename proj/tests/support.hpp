#pragma once

#include "wkl/cosets.hpp"
#include "wkl/job.hpp"
#include "wkl/root_system.hpp"
#include "wkl/weyl_group.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace wkl::testing {

inline std::shared_ptr<const WeylGroup> group_of(char letter, int rank) {
  static std::map<std::pair<char, int>, std::shared_ptr<const WeylGroup>> cache;
  auto& slot = cache[{letter, rank}];
  if (!slot) slot = std::make_shared<const WeylGroup>(std::make_shared<const RootSystem>(RootSystem::build(letter, rank)));
  return slot;
}

inline std::shared_ptr<const ThetaCosets> cosets_of(char letter, int rank, std::vector<int> theta) {
  return std::make_shared<const ThetaCosets>(group_of(letter, rank), std::move(theta));
}

inline Weight weight(const std::string& text) { return parse_lambda(text); }

inline int elt(const WeylGroup& group, std::vector<int> word) { return group.from_word(word); }

inline int root(const RootSystem& rs, std::vector<int> coords) { return rs.find_root(coords).value(); }

inline std::vector<std::vector<int>> all_subsets(int rank) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << rank); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < rank; ++i)
      if (mask & (1 << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

struct CatalogType {
  char letter;
  int rank;
  std::vector<std::string> weights;
};

// Antidominant regular weights covering distinct integrality patterns:
// integral, generic, and mixed (rational or transcendental) ones whose
// integral subsystem is not generated by simple roots.
inline const std::vector<CatalogType>& weight_catalog() {
  static const std::vector<CatalogType> catalog = {
      {'A', 1, {"-1", "-3", "-1/2", "-2/3", "-1+t1"}},
      {'A', 2, {"-1,-1", "-2,-1", "-1+t1,-1+t2", "-1+t1,-1-t1", "-1,-1+t1", "-1/2,-1/2"}},
      {'B', 2, {"-1,-1", "-1+t1,-1+t2", "-1/2,-1", "-1,-1/2", "-1+t1,-1-t1", "-1+t1,-1-2*t1"}},
      {'A', 3, {"-1,-1,-1", "-1+t1,-1+t2,-1+t3", "-5-4*t1,-5+4*t1,-5", "-1/2,-1/2,-1/2", "-1,-1+t1,-1",
                "-1+t1,-1,-1-t1"}},
      {'B', 3, {"-1,-1,-1", "-1+t1,-1+t2,-1+t3", "-1+t1,-1-t1,-1", "-1/2,-1,-1", "-1,-1,-1/2",
                "-1,-1+t1,-1-2*t1", "-1,-1+t1,-1-t1"}},
      {'G', 2, {"-1,-1", "-1+t1,-1+t2", "-1/2,-1", "-1,-1/2", "-1/3,-1", "-1,-1/3", "-1+t1,-1-t1",
                "-1+3*t1,-1-t1"}},
  };
  return catalog;
}

}  // namespace wkl::testing
