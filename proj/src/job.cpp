#include "wkl/job.hpp"

#include "wkl/char_formula.hpp"
#include "wkl/kl_engine.hpp"
#include "wkl/oracle.hpp"
#include "wkl/report.hpp"

#include <json.hpp>

#include <cctype>
#include <map>
#include <ostream>

namespace wkl {

std::pair<char, int> parse_type(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
    throw InputError("type: expected a letter and a rank, e.g. A3");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw InputError("type: bad rank at position " + std::to_string(i));
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return {letter, std::stoi(s.substr(1))};
}

std::vector<int> parse_theta(std::string_view text, int rank) {
  static const std::vector<std::vector<std::string>> names = {
      {"α", "alpha", "a"}, {"β", "beta", "b"}, {"γ", "gamma", "c"},
      {"δ", "delta", "d"}, {"ε", "epsilon", "e"}, {"ζ", "zeta", "f"}};
  std::vector<int> out;
  std::size_t start = 0;
  const std::string s(text);
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    std::string tok = s.substr(start, end - start);
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (!tok.empty()) {
      int idx = -1;
      for (int i = 0; i < static_cast<int>(names.size()) && idx < 0; ++i)
        for (const auto& n : names[i])
          if (tok == n) idx = i;
      if (idx < 0 && std::all_of(tok.begin(), tok.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        idx = std::stoi(tok);
      if (idx < 0) throw InputError("theta: unknown simple root '" + tok + "' at position " + std::to_string(start));
      if (idx >= rank)
        throw InputError("theta: simple root '" + tok + "' out of range for rank " + std::to_string(rank));
      out.push_back(idx);
    } else if (end != s.size()) {
      throw InputError("theta: empty entry at position " + std::to_string(start));
    }
    start = end + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

class LambdaParser {
 public:
  explicit LambdaParser(std::string_view text) : s_(text) {}

  Weight parse() {
    std::vector<std::pair<Rational, std::map<int, Rational>>> coords;
    skip();
    if (pos_ == s_.size()) fail("empty weight");
    while (true) {
      coords.push_back(coordinate());
      skip();
      if (pos_ == s_.size()) break;
      if (s_[pos_] != ',') fail("expected ',' or end of input");
      ++pos_;
    }
    int k = 0;
    for (const auto& [c, t] : coords)
      if (!t.empty()) k = std::max(k, t.rbegin()->first);
    std::vector<Pairing> out;
    for (auto& [c, t] : coords) {
      std::vector<Rational> trans(k, Rational(0));
      for (const auto& [j, v] : t) trans[j - 1] = v;
      out.emplace_back(c, std::move(trans));
    }
    return Weight(std::move(out), static_cast<std::size_t>(k));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("lambda: " + what + " at position " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  BigInt integer() {
    if (!digit()) fail("expected a digit");
    BigInt v = 0;
    while (digit()) v = v * 10 + (s_[pos_++] - '0');
    return v;
  }

  std::pair<Rational, std::map<int, Rational>> coordinate() {
    Rational constant = 0;
    std::map<int, Rational> trans;
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        break;
      }
      first = false;
      Rational coeff = 1;
      bool have_number = false;
      if (digit()) {
        BigInt num = integer();
        BigInt den = 1;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '/') {
          ++pos_;
          skip();
          den = integer();
          if (den == 0) fail("zero denominator");
        }
        coeff = Rational(num, den);
        have_number = true;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '*') {
          ++pos_;
          skip();
          if (pos_ >= s_.size() || s_[pos_] != 't') fail("expected 't' after '*'");
        }
      }
      if (pos_ < s_.size() && s_[pos_] == 't') {
        ++pos_;
        const std::size_t at = pos_;
        BigInt k = integer();
        if (k < 1 || k > kMaxTranscendentals) {
          pos_ = at;
          fail("transcendental index must be between 1 and " + std::to_string(kMaxTranscendentals));
        }
        trans[static_cast<int>(k)] += sign * coeff;
      } else if (have_number) {
        constant += sign * coeff;
      } else {
        fail("expected a number or t<k>");
      }
      skip();
      if (pos_ >= s_.size() || s_[pos_] == ',') break;
    }
    for (auto it = trans.begin(); it != trans.end();) it = it->second == 0 ? trans.erase(it) : std::next(it);
    return {constant, trans};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Weight parse_lambda(std::string_view text) { return LambdaParser(text).parse(); }

// ------------------------------------------------------------------------ run

namespace {

void emit(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << render_json(r);
  } else if (format == "latex") {
    out << render_latex(r);
  } else {
    out << render_text(r);
  }
}

OracleReport verify_all(const std::shared_ptr<const ThetaCosets>& tc, const KLTable& kl) {
  const WeylGroup& group = tc->group();
  const std::string scope = group.roots().name() + " lambda=" + kl.data.lambda.to_string();
  OracleReport report = recompute_cosets(*tc, kl.data.lambda);
  if (group.size() <= 1152)
    for (auto& check : structural_properties(*tc, kl.data.lambda).checks) report.checks.push_back(std::move(check));

  const std::vector<HeckeElt> direct = phi_direct(tc, kl.data.lambda);
  std::string bad;
  for (int c = 0; c < tc->size() && bad.empty(); ++c)
    if (!(direct[c] == kl.phi[c])) bad = "C=" + coset_label(*tc, c);
  report.add("direct recursion equals transported bases", scope, bad.empty(), bad);

  const std::vector<std::string> violations = kl_invariant_violations(kl);
  report.add("KL table invariants", scope, violations.empty(), violations.empty() ? "" : violations.front());

  bad.clear();
  for (std::size_t k = 0; k < kl.models.size() && bad.empty(); ++k) {
    const IntegralModel& m = kl.models[k];
    for (int f = 0; f < m.size() && bad.empty(); ++f)
      for (int alpha : model_descents(m, f))
        if (!(kl_basis_step(m, kl.bases[k], f, alpha) == kl.bases[k].psi[f]))
          bad = "u=" + group.word_string(m.u()) + " F=" + m.label(f) + " alpha=" + group.roots().root_name(alpha);
  }
  report.add("KL basis independent of the chosen descent", scope, bad.empty(), bad);

  const RootSystem& rs = group.roots();
  const WeightFlags flags = rs.weight_flags(kl.data.lambda);
  if (tc->theta().empty() && flags.integral && flags.regular && group.size() <= 1152) {
    std::string failure;
    const bool ok = kl_classical_relation_check(tc->group_ptr(), kl.data.lambda, &failure);
    report.add("classical Kazhdan-Lusztig relation", scope, ok, failure);
  }
  if (group.length(group.longest()) <= 10) {
    bad.clear();
    for (int v = 0; v < group.size() && bad.empty(); ++v)
      for (int w = 0; w < group.size() && bad.empty(); ++w)
        if (bruhat_subword(group, v, w) != group.bruhat_leq(v, w))
          bad = "v=" + group.word_string(v) + " w=" + group.word_string(w);
    report.add("Bruhat order against subwords", rs.name(), bad.empty(), bad);
  }
  return report;
}

int run_checked(const JobSpec& job, std::ostream& out) {
  if (job.max_rank < 1 || job.max_rank > RootSystem::kMaxRank)
    throw InputError("--max-rank must be between 1 and " + std::to_string(RootSystem::kMaxRank));
  if (job.rank > job.max_rank)
    throw InputError("rank " + std::to_string(job.rank) + " exceeds --max-rank " + std::to_string(job.max_rank));
  if (job.format != "text" && job.format != "json" && job.format != "latex")
    throw InputError("unknown format '" + job.format + "'");

  std::shared_ptr<const RootSystem> rs;
  try {
    rs = std::make_shared<const RootSystem>(RootSystem::build(job.type_letter, job.rank));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (static_cast<int>(job.lambda.rank()) != rs->rank())
    throw InputError("lambda has " + std::to_string(job.lambda.rank()) + " coordinates, rank is " +
                     std::to_string(rs->rank()));
  for (int i : job.theta)
    if (i < 0 || i >= rs->rank()) throw InputError("theta index out of range");

  auto group = std::make_shared<const WeylGroup>(rs);
  auto tc = std::make_shared<const ThetaCosets>(group, job.verma ? std::vector<int>{} : job.theta);
  const KLTable kl = compute_kl(tc, job.lambda);

  Report r;
  r.context = make_context(kl);
  if (job.command == "info") {
    r.models = make_models(kl);
  } else if (job.command == "cosets") {
    r.cosets = make_cosets(kl);
    r.models = make_models(kl);
  } else if (job.command == "klpolys") {
    r.models = make_models(kl);
    r.kl_polynomials = make_polys(kl);
  } else if (job.command == "characters") {
    const WeightFlags flags = rs->weight_flags(job.lambda);
    if (flags.regular) {
      const CharacterFormula cf = regular_formula(kl);
      r.character_mode = "regular";
      r.characters = make_characters(*tc, cf);
      if (job.invert) r.multiplicities = make_multiplicities(*tc, invert_multiplicities(cf));
    } else {
      if (job.invert) throw InputError("--invert needs a regular weight");
      const StabilizerData stab = stabilizer_data(*tc, job.lambda);
      r.character_mode = "singular";
      r.characters = make_characters(*tc, singular_formula(kl, stab));
    }
  } else if (job.command == "verify") {
    const OracleReport report = verify_all(tc, kl);
    if (job.format == "json") {
      nlohmann::json j;
      j["checks"] = nlohmann::json::array();
      for (const auto& c : report.checks)
        j["checks"].push_back({{"name", c.name}, {"scope", c.scope}, {"pass", c.pass}, {"counterexample", c.counterexample}});
      out << j.dump(2) << "\n";
    } else {
      for (const auto& c : report.checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name << " [" << c.scope << "]";
        if (!c.pass) out << ": " << c.counterexample;
        out << "\n";
      }
    }
    return report.all_pass() ? kExitOk : kExitVerify;
  } else {
    throw InputError("unknown command '" + job.command + "'");
  }
  emit(r, job.format, out);
  return kExitOk;
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    return run_checked(job, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "verification failure: " << e.what() << "\n";
    return kExitVerify;
  }
}

}  // namespace wkl
