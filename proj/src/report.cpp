#include "wkl/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wkl {

using nlohmann::json;

std::string element_label(const WeylGroup& group, int w) { return group.word_string(w); }

std::string coset_label(const ThetaCosets& tc, int c) { return tc.label(c); }

namespace {

std::vector<std::string> root_names(const RootSystem& rs, const std::vector<int>& roots) {
  std::vector<std::string> out;
  for (int r : roots) out.push_back(rs.root_name(r));
  return out;
}

std::vector<std::string> element_names(const WeylGroup& group, const std::vector<int>& elems) {
  std::vector<std::string> out;
  for (int w : elems) out.push_back(group.word_string(w));
  return out;
}

}  // namespace

ReportContext make_context(const KLTable& kl) {
  const ThetaCosets& tc = kl.tc();
  const RootSystem& rs = tc.group().roots();
  ReportContext ctx;
  ctx.type = rs.name();
  for (int i : tc.theta()) ctx.theta.push_back(RootSystem::simple_name(i));
  ctx.lambda = kl.data.lambda.to_string();
  const WeightFlags f = rs.weight_flags(kl.data.lambda);
  ctx.antidominant = f.antidominant;
  ctx.regular = f.regular;
  ctx.integral = f.integral;
  ctx.sigma_lambda_pos = root_names(rs, kl.data.sigma_lambda_pos);
  ctx.pi_lambda = root_names(rs, kl.data.pi_lambda);
  ctx.a_lambda = element_names(tc.group(), kl.data.a_lambda);
  ctx.a_theta_lambda = element_names(tc.group(), kl.data.a_theta_lambda);
  return ctx;
}

std::vector<ReportCoset> make_cosets(const KLTable& kl) {
  const ThetaCosets& tc = kl.tc();
  const WeylGroup& group = tc.group();
  const RootSystem& rs = group.roots();
  std::vector<ReportCoset> out;
  for (int c = 0; c < tc.size(); ++c) {
    ReportCoset rc;
    rc.id = c;
    rc.label = coset_label(tc, c);
    rc.shortest = group.word_string(tc.coset(c).shortest);
    rc.length = tc.length(c);
    rc.block = group.word_string(kl.data.double_coset_rep(c));
    // Covers of longest representatives are reflections of length one less.
    const int top = tc.coset(c).longest;
    for (int r = 0; r < rs.num_positive(); ++r) {
      const int y = group.multiply(top, group.reflection(r));
      if (group.length(y) + 1 == group.length(top) && tc.is_longest_rep(y)) rc.covers.push_back(tc.coset_of(y));
    }
    std::sort(rc.covers.begin(), rc.covers.end());
    rc.covers.erase(std::unique(rc.covers.begin(), rc.covers.end()), rc.covers.end());
    out.push_back(std::move(rc));
  }
  return out;
}

std::vector<ReportModel> make_models(const KLTable& kl) {
  const ThetaCosets& tc = kl.tc();
  const RootSystem& rs = tc.group().roots();
  std::vector<ReportModel> out;
  for (const auto& m : kl.models) {
    ReportModel rm;
    rm.u = tc.group().word_string(m.u());
    rm.theta = root_names(rs, m.theta());
    for (int e = 0; e < m.size(); ++e) {
      rm.cosets.push_back(m.label(e));
      rm.ind.push_back(coset_label(tc, m.ind(e)));
    }
    out.push_back(std::move(rm));
  }
  return out;
}

std::vector<ReportPoly> make_polys(const KLTable& kl) {
  const ThetaCosets& tc = kl.tc();
  std::vector<ReportPoly> out;
  for (std::size_t k = 0; k < kl.models.size(); ++k) {
    const IntegralModel& m = kl.models[k];
    const std::vector<int> order = model_order(m);
    for (int e : order)
      for (int f : order)
        if (m.leq(f, e))
          out.push_back({tc.group().word_string(m.u()), m.label(e), m.label(f), kl.bases[k].poly(e, f).to_string()});
  }
  return out;
}

std::vector<ReportCharacter> make_characters(const ThetaCosets& tc, const CharacterFormula& cf) {
  auto name = [&](const ModuleLabel& l) {
    return cf.mode == FormulaMode::Regular ? coset_label(tc, l.coset) : tc.group().word_string(l.element);
  };
  std::vector<ReportCharacter> out;
  for (const auto& row : cf.rows) {
    ReportCharacter rc;
    rc.irreducible = name(row.irreducible);
    for (const auto& e : row.entries) rc.entries.push_back({name(e.standard), e.coeff});
    out.push_back(std::move(rc));
  }
  return out;
}

std::vector<ReportCharacter> make_multiplicities(const ThetaCosets& tc, const MultiplicityMatrix& mm) {
  std::vector<ReportCharacter> out;
  for (std::size_t i = 0; i < mm.labels.size(); ++i) {
    ReportCharacter rc;
    rc.irreducible = coset_label(tc, mm.labels[i].coset);
    for (std::size_t j = 0; j < mm.labels.size(); ++j)
      if (mm.m[i][j] != 0) rc.entries.push_back({coset_label(tc, mm.labels[j].coset), mm.m[i][j]});
    out.push_back(std::move(rc));
  }
  return out;
}

// ----------------------------------------------------------------------- text

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + v[k];
  return s;
}

std::string braces(const std::vector<std::string>& v) { return "{" + join(v) + "}"; }

std::string character_line(const ReportCharacter& c, const std::string& lhs_fn, const std::string& rhs_fn) {
  std::string s = lhs_fn + "(" + c.irreducible + ") =";
  bool first = true;
  for (const auto& e : c.entries) {
    const std::int64_t mag = e.coeff < 0 ? -e.coeff : e.coeff;
    s += first ? (e.coeff < 0 ? " -" : " ") : (e.coeff < 0 ? " - " : " + ");
    if (mag != 1) s += std::to_string(mag) + " ";
    s += rhs_fn + "(" + e.standard + ")";
    first = false;
  }
  if (first) s += " 0";
  return s;
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  const ReportContext& c = r.context;
  out << "type " << c.type << ", Θ = " << braces(c.theta) << ", λ = (" << c.lambda << ")\n";
  out << "flags: antidominant=" << (c.antidominant ? "yes" : "no") << " regular=" << (c.regular ? "yes" : "no")
      << " integral=" << (c.integral ? "yes" : "no") << "\n";
  out << "Σ_λ^+ = " << braces(c.sigma_lambda_pos) << "\n";
  out << "Π_λ = " << braces(c.pi_lambda) << "\n";
  out << "A_λ = " << braces(c.a_lambda) << "\n";
  out << "A_Θ,λ = " << braces(c.a_theta_lambda) << "\n";

  if (!r.cosets.empty()) {
    out << "\ncosets (" << r.cosets.size() << ")\n";
    for (const auto& rc : r.cosets) {
      std::vector<std::string> covers;
      for (int d : rc.covers) covers.push_back(std::to_string(d));
      out << "  [" << rc.id << "] " << rc.label << "  length " << rc.length << "  shortest " << rc.shortest
          << "  u = " << rc.block << "  covers " << braces(covers) << "\n";
    }
  }
  if (!r.models.empty()) {
    out << "\nintegral models\n";
    for (const auto& m : r.models) {
      out << "  u = " << m.u << ", Θ(u,λ) = " << braces(m.theta) << "\n";
      for (std::size_t e = 0; e < m.cosets.size(); ++e)
        out << "    W_• " << m.cosets[e] << "  ->  " << m.ind[e] << "\n";
    }
  }
  if (!r.kl_polynomials.empty()) {
    out << "\nKazhdan-Lusztig polynomials P(C, D)\n";
    for (const auto& p : r.kl_polynomials)
      out << "  u = " << p.model << ":  P(W_• " << p.c << ", W_• " << p.d << ") = " << p.poly << "\n";
  }
  if (!r.characters.empty()) {
    out << "\ncharacters (" << r.character_mode << ")\n";
    for (const auto& ch : r.characters) out << "  " << character_line(ch, "ch L", "ch M") << "\n";
  }
  if (!r.multiplicities.empty()) {
    out << "\nmultiplicities [M : L]\n";
    for (const auto& ch : r.multiplicities) out << "  " << character_line(ch, "ch M", "ch L") << "\n";
  }
  return out.str();
}

// ----------------------------------------------------------------------- json

namespace {

json characters_json(const std::vector<ReportCharacter>& rows) {
  json arr = json::array();
  for (const auto& ch : rows) {
    json entries = json::array();
    for (const auto& e : ch.entries) entries.push_back({{"standard", e.standard}, {"coeff", e.coeff}});
    arr.push_back({{"irreducible", ch.irreducible}, {"entries", entries}});
  }
  return arr;
}

std::vector<ReportCharacter> characters_from(const json& arr) {
  std::vector<ReportCharacter> out;
  for (const auto& j : arr) {
    ReportCharacter ch;
    ch.irreducible = j.at("irreducible").get<std::string>();
    for (const auto& e : j.at("entries")) ch.entries.push_back({e.at("standard").get<std::string>(), e.at("coeff").get<std::int64_t>()});
    out.push_back(std::move(ch));
  }
  return out;
}

}  // namespace

std::string render_json(const Report& r) {
  json j;
  const ReportContext& c = r.context;
  j["context"] = {{"type", c.type},
                  {"theta", c.theta},
                  {"lambda", c.lambda},
                  {"flags", {{"antidominant", c.antidominant}, {"regular", c.regular}, {"integral", c.integral}}},
                  {"sigma_lambda_pos", c.sigma_lambda_pos},
                  {"pi_lambda", c.pi_lambda},
                  {"a_lambda", c.a_lambda},
                  {"a_theta_lambda", c.a_theta_lambda}};
  j["cosets"] = json::array();
  for (const auto& rc : r.cosets)
    j["cosets"].push_back({{"id", rc.id},
                           {"label", rc.label},
                           {"shortest", rc.shortest},
                           {"length", rc.length},
                           {"block", rc.block},
                           {"covers", rc.covers}});
  j["models"] = json::array();
  for (const auto& m : r.models)
    j["models"].push_back({{"u", m.u}, {"theta", m.theta}, {"cosets", m.cosets}, {"ind", m.ind}});
  j["kl_polynomials"] = json::array();
  for (const auto& p : r.kl_polynomials)
    j["kl_polynomials"].push_back({{"model", p.model}, {"c", p.c}, {"d", p.d}, {"poly", p.poly}});
  j["character_mode"] = r.character_mode;
  j["characters"] = characters_json(r.characters);
  j["multiplicities"] = characters_json(r.multiplicities);
  return j.dump(2) + "\n";
}

Report parse_report_json(const std::string& text) {
  Report r;
  try {
    const json j = json::parse(text);
    const json& c = j.at("context");
    r.context.type = c.at("type").get<std::string>();
    r.context.theta = c.at("theta").get<std::vector<std::string>>();
    r.context.lambda = c.at("lambda").get<std::string>();
    r.context.antidominant = c.at("flags").at("antidominant").get<bool>();
    r.context.regular = c.at("flags").at("regular").get<bool>();
    r.context.integral = c.at("flags").at("integral").get<bool>();
    r.context.sigma_lambda_pos = c.at("sigma_lambda_pos").get<std::vector<std::string>>();
    r.context.pi_lambda = c.at("pi_lambda").get<std::vector<std::string>>();
    r.context.a_lambda = c.at("a_lambda").get<std::vector<std::string>>();
    r.context.a_theta_lambda = c.at("a_theta_lambda").get<std::vector<std::string>>();
    for (const auto& x : j.at("cosets"))
      r.cosets.push_back({x.at("id").get<int>(), x.at("label").get<std::string>(), x.at("shortest").get<std::string>(),
                          x.at("length").get<int>(), x.at("block").get<std::string>(),
                          x.at("covers").get<std::vector<int>>()});
    for (const auto& x : j.at("models"))
      r.models.push_back({x.at("u").get<std::string>(), x.at("theta").get<std::vector<std::string>>(),
                          x.at("cosets").get<std::vector<std::string>>(), x.at("ind").get<std::vector<std::string>>()});
    for (const auto& x : j.at("kl_polynomials"))
      r.kl_polynomials.push_back({x.at("model").get<std::string>(), x.at("c").get<std::string>(),
                                  x.at("d").get<std::string>(), x.at("poly").get<std::string>()});
    r.character_mode = j.at("character_mode").get<std::string>();
    r.characters = characters_from(j.at("characters"));
    r.multiplicities = characters_from(j.at("multiplicities"));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
  }
  return r;
}

// ---------------------------------------------------------------------- latex

namespace {

// "s_α s_{α+β}" -> "s_{\alpha} s_{\alpha+\beta}"
std::string latexify(const std::string& s) {
  static const std::vector<std::pair<std::string, std::string>> greek = {
      {"α", "\\alpha "}, {"β", "\\beta "}, {"γ", "\\gamma "}, {"δ", "\\delta "}, {"ε", "\\epsilon "},
      {"ζ", "\\zeta "},  {"Θ", "\\Theta "}, {"λ", "\\lambda "}, {"•", "\\bullet "}};
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    bool hit = false;
    for (const auto& [from, to] : greek) {
      if (s.compare(i, from.size(), from) == 0) {
        out += to;
        i += from.size();
        hit = true;
        break;
      }
    }
    if (!hit) out += s[i++];
  }
  // Drop the space left before a closing brace, plus or end.
  std::string tidy;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] == ' ' && (i + 1 == out.size() || out[i + 1] == '}' || out[i + 1] == '+' || out[i + 1] == ' ')) continue;
    tidy += out[i];
  }
  return tidy;
}

std::string latex_poly(const std::string& p) {
  std::string out;
  for (char ch : p)
    if (ch != '*') out += ch;
  return out;
}

}  // namespace

std::string render_latex(const Report& r) {
  std::ostringstream out;
  for (const auto& m : r.models) {
    std::vector<const ReportPoly*> polys;
    for (const auto& p : r.kl_polynomials)
      if (p.model == m.u) polys.push_back(&p);
    if (polys.empty()) continue;
    std::map<std::pair<std::string, std::string>, std::string> cell;
    std::vector<std::string> order;
    for (const auto* p : polys) {
      cell[{p->c, p->d}] = p->poly;
      if (std::find(order.begin(), order.end(), p->c) == order.end()) order.push_back(p->c);
    }
    out << "% u = " << m.u << "\n";
    out << "\\begin{tabular}{c|" << std::string(order.size(), 'c') << "}\n";
    out << "  $P_{EF}^{" << latexify(m.u == "1" ? "1" : m.u) << ",\\lambda}$";
    for (const auto& f : order) out << " & $W_\\bullet " << latexify(f) << "$";
    out << " \\\\ \\hline\n";
    for (const auto& e : order) {
      out << "  $W_\\bullet " << latexify(e) << "$";
      for (const auto& f : order) {
        auto it = cell.find({e, f});
        out << " & $" << (it == cell.end() ? "0" : latex_poly(it->second)) << "$";
      }
      out << " \\\\\n";
    }
    out << "\\end{tabular}\n\n";
  }
  if (!r.characters.empty()) {
    out << "\\begin{align*}\n";
    for (std::size_t k = 0; k < r.characters.size(); ++k) {
      const auto& ch = r.characters[k];
      out << "  \\ch L(" << latexify(ch.irreducible) << ") &=";
      bool first = true;
      for (const auto& e : ch.entries) {
        const std::int64_t mag = e.coeff < 0 ? -e.coeff : e.coeff;
        out << (first ? (e.coeff < 0 ? " -" : " ") : (e.coeff < 0 ? " - " : " + "));
        if (mag != 1) out << mag << " ";
        out << "\\ch M(" << latexify(e.standard) << ")";
        first = false;
      }
      out << (k + 1 < r.characters.size() ? ",\\\\\n" : ".\n");
    }
    out << "\\end{align*}\n";
  }
  return out.str();
}

}  // namespace wkl
