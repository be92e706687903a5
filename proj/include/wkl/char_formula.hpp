#pragma once

#include "wkl/cosets.hpp"
#include "wkl/kl_engine.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace wkl {

enum class FormulaMode { Regular, Singular };

// A standard or irreducible module label: the coset C and the element used
// to name it (the longest element w^C, or z in A_Theta^lambda).
struct ModuleLabel {
  int coset = 0;
  int element = 0;
  friend bool operator==(const ModuleLabel& a, const ModuleLabel& b) {
    return a.coset == b.coset && a.element == b.element;
  }
};

struct FormulaEntry {
  ModuleLabel standard;
  std::int64_t coeff = 0;
  friend bool operator==(const FormulaEntry& a, const FormulaEntry& b) {
    return a.standard == b.standard && a.coeff == b.coeff;
  }
};

struct FormulaRow {
  ModuleLabel irreducible;
  std::vector<FormulaEntry> entries;  // nonzero only, by coset id
  friend bool operator==(const FormulaRow& a, const FormulaRow& b) {
    return a.irreducible == b.irreducible && a.entries == b.entries;
  }
};

// ch L(irreducible) = sum coeff * ch M(standard), row by row.
struct CharacterFormula {
  FormulaMode mode = FormulaMode::Regular;
  std::vector<FormulaRow> rows;

  const FormulaRow* row_for(int coset) const;
};

// Rows and columns follow `labels`; entry (i, j) is [M(labels[i]) : L(labels[j])].
struct MultiplicityMatrix {
  std::vector<ModuleLabel> labels;
  std::vector<std::vector<std::int64_t>> m;
};

// Throws std::invalid_argument naming the failing coroot value.
void require_antidominant_regular(const RootSystem& rs, const Weight& lambda);

CharacterFormula regular_formula(const KLTable& kl);
MultiplicityMatrix invert_multiplicities(const CharacterFormula& cf);
CharacterFormula singular_formula(const KLTable& kl, const StabilizerData& stab);
CharacterFormula verma_mode(std::shared_ptr<const WeylGroup> group, const Weight& lambda);

}  // namespace wkl
