#pragma once

#include "wkl/char_formula.hpp"
#include "wkl/kl_engine.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wkl {

// Plain-data view of a computation, shared by the text, JSON and LaTeX
// renderers. Every field is a string or integer so JSON round-trips exactly.
struct ReportContext {
  std::string type;
  std::vector<std::string> theta;
  std::string lambda;
  bool antidominant = false;
  bool regular = false;
  bool integral = false;
  std::vector<std::string> sigma_lambda_pos;
  std::vector<std::string> pi_lambda;
  std::vector<std::string> a_lambda;
  std::vector<std::string> a_theta_lambda;
  bool operator==(const ReportContext&) const = default;
};

struct ReportCoset {
  int id = 0;
  std::string label;     // named by the longest element
  std::string shortest;
  int length = 0;
  std::string block;     // double coset representative u
  std::vector<int> covers;  // ids of cosets directly below in the Bruhat order
  bool operator==(const ReportCoset&) const = default;
};

struct ReportModel {
  std::string u;
  std::vector<std::string> theta;
  std::vector<std::string> cosets;  // model cosets named by their longest element
  std::vector<std::string> ind;     // image of each model coset
  bool operator==(const ReportModel&) const = default;
};

struct ReportPoly {
  std::string model;  // u
  std::string c;
  std::string d;
  std::string poly;
  bool operator==(const ReportPoly&) const = default;
};

struct ReportEntry {
  std::string standard;
  std::int64_t coeff = 0;
  bool operator==(const ReportEntry&) const = default;
};

struct ReportCharacter {
  std::string irreducible;
  std::vector<ReportEntry> entries;
  bool operator==(const ReportCharacter&) const = default;
};

struct Report {
  ReportContext context;
  std::vector<ReportCoset> cosets;
  std::vector<ReportModel> models;
  std::vector<ReportPoly> kl_polynomials;
  std::string character_mode;  // "regular", "singular" or empty
  std::vector<ReportCharacter> characters;
  // Row i: [M(label_i) : L(label_j)] as (irreducible label, multiplicity) pairs.
  std::vector<ReportCharacter> multiplicities;
  bool operator==(const Report&) const = default;
};

std::string coset_label(const ThetaCosets& tc, int c);
std::string element_label(const WeylGroup& group, int w);

ReportContext make_context(const KLTable& kl);
std::vector<ReportCoset> make_cosets(const KLTable& kl);
std::vector<ReportModel> make_models(const KLTable& kl);
std::vector<ReportPoly> make_polys(const KLTable& kl);
std::vector<ReportCharacter> make_characters(const ThetaCosets& tc, const CharacterFormula& cf);
std::vector<ReportCharacter> make_multiplicities(const ThetaCosets& tc, const MultiplicityMatrix& mm);

std::string render_text(const Report& r);
std::string render_json(const Report& r);
std::string render_latex(const Report& r);
// Inverse of render_json; throws std::invalid_argument on malformed input.
Report parse_report_json(const std::string& text);

}  // namespace wkl
