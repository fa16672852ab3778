#include "hangar/milp.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "hangar/geometry.hpp"

namespace hangar::milp {

namespace {

std::string name1(std::string_view base, std::string_view a) {
  return std::string(base) + "(" + std::string(a) + ")";
}

std::string name2(std::string_view base, std::string_view a, std::string_view b) {
  return std::string(base) + "(" + std::string(a) + "," + std::string(b) + ")";
}

std::string number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);  // shortest round-trip form
  return std::string(buf, r.ptr);
}

class Builder {
 public:
  explicit Builder(Model& m) : m_(m) {}

  std::size_t var(std::string name, VarKind kind, double lb, double ub,
                  std::string tag) {
    const std::size_t index = m_.variables.size();
    m_.by_name.emplace(name, index);
    m_.variables.push_back(Variable{std::move(name), kind, lb, ub, std::move(tag)});
    return index;
  }

  std::size_t binary(std::string name) {
    return var(std::move(name), VarKind::Binary, 0.0, 1.0, "dom_binary");
  }

  std::size_t fixed_binary(std::string name, double value, std::string tag) {
    return var(std::move(name), VarKind::Binary, value, value, std::move(tag));
  }

  std::size_t operator()(std::string_view name) const { return m_.index_of(name); }

  void row(std::string name, std::vector<Term> terms, Sense sense, double rhs) {
    std::vector<Term> kept;
    for (const auto& t : terms) {
      if (t.coef != 0.0) kept.push_back(t);
    }
    m_.rows.push_back(Row{std::move(name), std::move(kept), sense, rhs});
  }

 private:
  Model& m_;
};

}  // namespace

std::string Row::family() const { return family_of(name); }

std::string family_of(std::string_view name) {
  const auto cut = name.find_first_of("_(");
  return std::string(name.substr(0, cut));
}

std::size_t Model::index_of(std::string_view name) const {
  auto it = by_name.find(std::string(name));
  if (it == by_name.end()) throw MissingVariable("no variable named " + std::string(name));
  return it->second;
}

bool Model::has_variable(std::string_view name) const {
  return by_name.count(std::string(name)) != 0;
}

const Row* Model::find_row(std::string_view name) const {
  for (const auto& r : rows) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

Model build_model(const Instance& instance) {
  validate_instance(instance);
  const auto& h = instance.hangar;
  const std::size_t n = instance.size();
  const std::size_t nc = instance.current.size();

  Model m;
  m.label = instance.label;
  m.n_current = nc;
  m.eps_t = h.eps_t;
  for (std::size_t i = 0; i < n; ++i) m.ids.push_back(instance.at(i).id);
  m.big_m = derive_big_m(instance);

  // The literal M_T can be smaller than a feasible roll-out plus eps_t, which
  // would cut off schedules through the OutIn rows of rejected or current
  // partners. Widen it by every admissible delay and eps_t shift.
  double widened = 0.0;
  for (const auto& f : instance.future) widened = std::max(widened, f.eta);
  for (std::size_t i = 0; i < n; ++i) widened += instance.at(i).service;
  for (const auto& f : instance.future) {
    if (f.arrival_penalty() > 0) widened += f.rejection_penalty() / f.arrival_penalty();
  }
  widened += static_cast<double>((n + 1) * (2 * n + 2)) * h.eps_t;
  m.m_t = std::max(m.big_m.m_t, widened);
  const double mt = m.m_t;
  const double mx = m.big_m.m_x;
  const double my = m.big_m.m_y;
  const double eps = h.eps_t;

  Builder b(m);
  auto is_f = [&](std::size_t i) { return i >= nc; };
  const auto& ids = m.ids;

  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = instance.at(i);
    if (s.is_current()) {
      b.var(name1("X", s.id), VarKind::Continuous, *s.x_init, *s.x_init, "fix20_x");
    } else {
      b.var(name1("X", s.id), VarKind::Continuous, 0.0, kInfinity, "dom_nonneg");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = instance.at(i);
    if (s.is_current()) {
      b.var(name1("Y", s.id), VarKind::Continuous, *s.y_init, *s.y_init, "fix21_y");
    } else {
      b.var(name1("Y", s.id), VarKind::Continuous, 0.0, kInfinity, "dom_nonneg");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_f(i)) {
      b.var(name1("Roll_in", ids[i]), VarKind::Continuous, 0.0, 0.0, "fix22_rollin");
    } else {
      b.var(name1("Roll_in", ids[i]), VarKind::Continuous, 0.0, kInfinity, "dom_nonneg");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    b.var(name1("Roll_out", ids[i]), VarKind::Continuous, 0.0, kInfinity, "dom_nonneg");
  }
  for (std::size_t i = nc; i < n; ++i) {
    b.var(name1("D_arr", ids[i]), VarKind::Continuous, 0.0, kInfinity, "dom_nonneg");
  }
  for (std::size_t i = 0; i < n; ++i) {
    b.var(name1("D_dep", ids[i]), VarKind::Continuous, 0.0, kInfinity, "dom_nonneg");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_f(i)) {
      b.fixed_binary(name1("Accept", ids[i]), 1.0, "fix19_accept");
    } else {
      b.binary(name1("Accept", ids[i]));
    }
  }
  for (const char* base : {"Right", "Above", "OutIn"}) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) b.binary(name2(base, ids[i], ids[j]));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::string nm = name2("InIn", ids[i], ids[j]);
      if (is_f(i) && is_f(j)) {
        b.binary(nm);
      } else if (!is_f(i) && is_f(j)) {
        b.fixed_binary(nm, 1.0, "fix23_inin");
      } else if (is_f(i)) {
        b.fixed_binary(nm, 0.0, "fix24_inin");
      } else {
        b.fixed_binary(nm, 1.0, "fix25_inin");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) b.binary(name2("OutOut", ids[i], ids[j]));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && (is_f(i) || is_f(j))) b.binary(name2("InOut", ids[i], ids[j]));
    }
  }

  auto X = [&](std::size_t i) { return b(name1("X", ids[i])); };
  auto Y = [&](std::size_t i) { return b(name1("Y", ids[i])); };
  auto Rin = [&](std::size_t i) { return b(name1("Roll_in", ids[i])); };
  auto Rout = [&](std::size_t i) { return b(name1("Roll_out", ids[i])); };
  auto Darr = [&](std::size_t i) { return b(name1("D_arr", ids[i])); };
  auto Ddep = [&](std::size_t i) { return b(name1("D_dep", ids[i])); };
  auto Acc = [&](std::size_t i) { return b(name1("Accept", ids[i])); };
  auto P = [&](const char* base, std::size_t i, std::size_t j) {
    return b(name2(base, ids[i], ids[j]));
  };

  // Objective.
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = instance.at(i);
    if (is_f(i)) {
      m.objective_offset += s.rejection_penalty();
      m.objective.push_back({Acc(i), -s.rejection_penalty()});
      m.objective.push_back({Darr(i), s.arrival_penalty()});
      m.objective.push_back({X(i), h.eps_p});
      m.objective.push_back({Y(i), h.eps_p});
    }
    m.objective.push_back({Ddep(i), s.p_dep});
  }
  std::erase_if(m.objective, [](const Term& t) { return t.coef == 0.0; });
  std::stable_sort(m.objective.begin(), m.objective.end(),
                   [](const Term& x, const Term& y) { return x.var < y.var; });

  for (std::size_t i = nc; i < n; ++i) {
    b.row(name1("eq2_accept", ids[i]),
          {{X(i), 1}, {Y(i), 1}, {Rin(i), 1}, {Rout(i), 1}, {Darr(i), 1}, {Ddep(i), 1},
           {Acc(i), -(mx + my + 4 * mt)}},
          Sense::Le, 0.0);
  }
  for (std::size_t i = nc; i < n; ++i) {
    b.row(name1("eq3_eta", ids[i]), {{Rin(i), 1}, {Acc(i), -instance.at(i).eta}},
          Sense::Ge, 0.0);
  }
  for (std::size_t i = 0; i < n; ++i) {
    b.row(name1("eq4_servt", ids[i]),
          {{Rout(i), 1}, {Rin(i), -1}, {Acc(i), -instance.at(i).service}}, Sense::Ge, 0.0);
  }
  for (std::size_t i = nc; i < n; ++i) {
    b.row(name1("eq5_darr", ids[i]), {{Darr(i), 1}, {Rin(i), -1}}, Sense::Ge,
          -instance.at(i).eta);
  }
  for (std::size_t i = 0; i < n; ++i) {
    b.row(name1("eq6_ddep", ids[i]), {{Ddep(i), 1}, {Rout(i), -1}}, Sense::Ge,
          -instance.at(i).etd);
  }
  for (std::size_t i = nc; i < n; ++i) {
    b.row(name1("eq7_xmin", ids[i]), {{X(i), 1}, {Acc(i), -h.buffer}}, Sense::Ge, 0.0);
  }
  for (std::size_t i = nc; i < n; ++i) {
    b.row(name1("eq8_xmax", ids[i]), {{X(i), 1}, {Acc(i), mx}}, Sense::Le,
          h.hw - h.buffer - instance.at(i).width + mx);
  }
  for (std::size_t i = nc; i < n; ++i) {
    b.row(name1("eq9_ymin", ids[i]), {{Y(i), 1}, {Acc(i), -h.buffer}}, Sense::Ge, 0.0);
  }
  for (std::size_t i = nc; i < n; ++i) {
    b.row(name1("eq10_ymax", ids[i]), {{Y(i), 1}, {Acc(i), my}}, Sense::Le,
          h.hl - h.buffer - instance.at(i).length + my);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      b.row(name2("eq11_right", ids[i], ids[j]),
            {{X(j), 1}, {X(i), -1}, {P("Right", i, j), mx}}, Sense::Le,
            mx - instance.at(j).width - h.buffer);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      b.row(name2("eq12_above", ids[i], ids[j]),
            {{Y(j), 1}, {Y(i), -1}, {P("Above", i, j), my}}, Sense::Le,
            my - instance.at(j).length - h.buffer);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      b.row(name2("eq13_disj", ids[i], ids[j]),
            {{P("Right", j, i), 1}, {P("Right", i, j), 1}, {P("Above", j, i), 1},
             {P("Above", i, j), 1}, {P("OutIn", i, j), 1}, {P("OutIn", j, i), 1},
             {Acc(i), -1}, {Acc(j), -1}},
            Sense::Ge, -1.0);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      b.row(name2("eq14_outin", ids[i], ids[j]),
            {{Rout(i), 1}, {Rin(j), -1}, {P("OutIn", i, j), mt}}, Sense::Le, mt - eps);
    }
  }
  for (std::size_t i = nc; i < n; ++i) {
    for (std::size_t j = nc; j < n; ++j) {
      if (i == j) continue;
      b.row(name2("eq15_inin", ids[i], ids[j]),
            {{Rin(j), 1}, {Rin(i), -1}, {P("InIn", i, j), -mt}, {Acc(i), -mt}, {Acc(j), -mt}},
            Sense::Ge, eps - 3 * mt);
    }
  }
  for (std::size_t i = nc; i < n; ++i) {
    for (std::size_t j = nc; j < n; ++j) {
      if (i == j) continue;
      b.row(name2("eq16_inin", ids[i], ids[j]),
            {{Rin(i), 1}, {Rin(j), -1}, {P("InIn", i, j), mt}, {Acc(i), -mt}, {Acc(j), -mt}},
            Sense::Ge, eps - 2 * mt);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      b.row(name2("eq15b_outout", ids[i], ids[j]),
            {{Rout(j), 1}, {Rout(i), -1}, {P("OutOut", i, j), -mt}, {Acc(i), -mt},
             {Acc(j), -mt}},
            Sense::Ge, eps - 3 * mt);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      b.row(name2("eq16b_outout", ids[i], ids[j]),
            {{Rout(i), 1}, {Rout(j), -1}, {P("OutOut", i, j), mt}, {Acc(i), -mt},
             {Acc(j), -mt}},
            Sense::Ge, eps - 2 * mt);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !(is_f(i) || is_f(j))) continue;
      b.row(name2("eq15c_inout", ids[i], ids[j]),
            {{Rout(j), 1}, {Rin(i), -1}, {P("InOut", i, j), -mt}, {Acc(i), -mt},
             {Acc(j), -mt}},
            Sense::Ge, eps - 3 * mt);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !(is_f(i) || is_f(j))) continue;
      b.row(name2("eq16c_inout", ids[i], ids[j]),
            {{Rin(i), 1}, {Rout(j), -1}, {P("InOut", i, j), mt}, {Acc(i), -mt},
             {Acc(j), -mt}},
            Sense::Ge, eps - 2 * mt);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      b.row(name2("eq17_block_out", ids[i], ids[j]),
            {{Rout(i), 1}, {Rout(j), -1}, {P("Above", j, i), -mt}, {P("Right", i, j), mt},
             {P("Right", j, i), mt}, {P("InIn", i, j), -mt}},
            Sense::Ge, eps - 2 * mt);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !(is_f(i) || is_f(j))) continue;
      b.row(name2("eq18_block_in", ids[i], ids[j]),
            {{Rin(i), 1}, {Rout(j), -1}, {P("Above", j, i), -mt}, {P("Right", i, j), mt},
             {P("Right", j, i), mt}, {P("InIn", i, j), mt}},
            Sense::Ge, eps - mt);
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// LP text
// ---------------------------------------------------------------------------

namespace {

void write_terms(std::ostringstream& out, const Model& m, const std::vector<Term>& terms) {
  std::size_t on_line = 0;
  for (const auto& t : terms) {
    if (on_line == 6) {
      out << "\n   ";
      on_line = 0;
    }
    out << (t.coef < 0 ? " - " : " + ") << number(std::abs(t.coef)) << ' '
        << m.variables[t.var].name;
    ++on_line;
  }
  if (terms.empty()) out << " 0 " << m.variables.front().name;
}

const char* sense_text(Sense s) {
  switch (s) {
    case Sense::Le: return "<=";
    case Sense::Eq: return "=";
    case Sense::Ge: return ">=";
  }
  return "=";
}

}  // namespace

std::string export_lp(const Model& m) {
  std::ostringstream out;
  out << "\\ hangar scheduling model " << m.label << "\n";
  out << "\\ objective constant " << number(m.objective_offset) << "\n";
  out << "\\ M_T " << number(m.m_t) << " M_X " << number(m.big_m.m_x) << " M_Y "
      << number(m.big_m.m_y) << "\n";
  out << "Minimize\n obj:";
  write_terms(out, m, m.objective);
  out << "\nSubject To\n";
  for (const auto& r : m.rows) {
    out << ' ' << r.name << ':';
    write_terms(out, m, r.terms);
    out << ' ' << sense_text(r.sense) << ' ' << number(r.rhs) << '\n';
  }
  out << "Bounds\n";
  for (const auto& v : m.variables) {
    if (v.fixed()) out << ' ' << v.name << " = " << number(v.lb) << '\n';
  }
  // Fixed binaries go under Generals so that their bounds are kept.
  out << "Generals\n";
  for (const auto& v : m.variables) {
    if (v.kind == VarKind::Binary && v.fixed()) out << ' ' << v.name << '\n';
  }
  out << "Binaries\n";
  for (const auto& v : m.variables) {
    if (v.kind == VarKind::Binary && !v.fixed()) out << ' ' << v.name << '\n';
  }
  out << "End\n";
  return out.str();
}

namespace {

enum class Section { None, Objective, Constraints, Bounds, Generals, Binaries, End };

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool parse_number(const std::string& tok, double& value) {
  if (tok.empty()) return false;
  char* end = nullptr;
  value = std::strtod(tok.c_str(), &end);
  return end == tok.c_str() + tok.size();
}

struct Token {
  std::string text;
  std::size_t line;
};

bool is_sense(const std::string& t) {
  return t == "<=" || t == ">=" || t == "=" || t == "<" || t == ">" || t == "=<" ||
         t == "=>";
}

Sense to_sense(const std::string& t) {
  if (t == "<=" || t == "<" || t == "=<") return Sense::Le;
  if (t == ">=" || t == ">" || t == "=>") return Sense::Ge;
  return Sense::Eq;
}

/// Linear expression starting at tokens[pos]; stops at a sense token or at
/// the end.
std::vector<LpProblem::NamedTerm> parse_expression(const std::vector<Token>& tokens,
                                                   std::size_t& pos) {
  std::vector<LpProblem::NamedTerm> terms;
  while (pos < tokens.size() && !is_sense(tokens[pos].text)) {
    double sign = 1.0;
    if (tokens[pos].text == "+" || tokens[pos].text == "-") {
      if (tokens[pos].text == "-") sign = -1.0;
      ++pos;
    }
    if (pos >= tokens.size()) throw ParseError("dangling sign", tokens.back().line);
    double coef = 1.0;
    double value = 0.0;
    if (parse_number(tokens[pos].text, value)) {
      coef = value;
      ++pos;
    }
    if (pos >= tokens.size() || is_sense(tokens[pos].text)) {
      throw ParseError("coefficient without a variable", tokens[pos - 1].line);
    }
    terms.push_back({tokens[pos].text, sign * coef});
    ++pos;
  }
  return terms;
}

}  // namespace

LpProblem parse_lp(std::string_view text) {
  LpProblem lp;
  Section section = Section::None;
  std::vector<Token> objective_tokens;
  std::vector<Token> constraint_tokens;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto cut = raw.find('\\'); cut != std::string::npos) raw.erase(cut);
    std::istringstream words(raw);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (tokens.empty()) continue;

    const std::string head = lower(tokens[0]);
    const std::string joined = tokens.size() > 1 ? head + " " + lower(tokens[1]) : head;
    if (tokens.size() == 1 && (head == "minimize" || head == "minimum" || head == "min")) {
      section = Section::Objective;
      continue;
    }
    if (joined == "subject to" || (tokens.size() == 1 && (head == "st" || head == "s.t."))) {
      section = Section::Constraints;
      continue;
    }
    if (tokens.size() == 1 && (head == "bounds" || head == "bound")) {
      section = Section::Bounds;
      continue;
    }
    if (tokens.size() == 1 && (head == "generals" || head == "general")) {
      section = Section::Generals;
      continue;
    }
    if (tokens.size() == 1 && (head == "binaries" || head == "binary")) {
      section = Section::Binaries;
      continue;
    }
    if (tokens.size() == 1 && head == "end") {
      section = Section::End;
      continue;
    }

    switch (section) {
      case Section::None:
      case Section::End:
        throw ParseError("text outside of any section", line_no);
      case Section::Objective:
        for (auto& t : tokens) objective_tokens.push_back({t, line_no});
        break;
      case Section::Constraints:
        for (auto& t : tokens) constraint_tokens.push_back({t, line_no});
        break;
      case Section::Bounds: {
        double a = 0.0;
        double c = 0.0;
        if (tokens.size() == 3 && tokens[1] == "=" && parse_number(tokens[2], a)) {
          lp.bounds[tokens[0]] = {a, a};
        } else if (tokens.size() == 3 && is_sense(tokens[1]) && parse_number(tokens[2], a)) {
          auto& bnd = lp.bounds.try_emplace(tokens[0], 0.0, kInfinity).first->second;
          (to_sense(tokens[1]) == Sense::Le ? bnd.second : bnd.first) = a;
        } else if (tokens.size() == 5 && parse_number(tokens[0], a) &&
                   parse_number(tokens[4], c) && to_sense(tokens[1]) == Sense::Le &&
                   to_sense(tokens[3]) == Sense::Le) {
          lp.bounds[tokens[2]] = {a, c};
        } else if (tokens.size() == 2 && lower(tokens[1]) == "free") {
          lp.bounds[tokens[0]] = {-kInfinity, kInfinity};
        } else {
          throw ParseError("unrecognized bound", line_no);
        }
        break;
      }
      case Section::Generals:
        for (auto& t : tokens) lp.generals.insert(t);
        break;
      case Section::Binaries:
        for (auto& t : tokens) lp.binaries.insert(t);
        break;
    }
  }
  if (section != Section::End) throw ParseError("missing End", line_no);

  std::size_t pos = 0;
  if (!objective_tokens.empty()) {
    if (objective_tokens[0].text.back() == ':') ++pos;
    lp.objective = parse_expression(objective_tokens, pos);
    if (pos != objective_tokens.size()) {
      throw ParseError("objective contains a relation", objective_tokens[pos].line);
    }
  }
  pos = 0;
  std::size_t unnamed = 0;
  while (pos < constraint_tokens.size()) {
    LpProblem::LpRow row;
    if (constraint_tokens[pos].text.back() == ':') {
      row.name = constraint_tokens[pos].text.substr(0, constraint_tokens[pos].text.size() - 1);
      ++pos;
    } else {
      row.name = "R" + std::to_string(++unnamed);
    }
    row.terms = parse_expression(constraint_tokens, pos);
    if (pos + 1 >= constraint_tokens.size()) {
      throw ParseError("row " + row.name + " lacks a relation and right-hand side",
                       constraint_tokens.back().line);
    }
    row.sense = to_sense(constraint_tokens[pos].text);
    if (!parse_number(constraint_tokens[pos + 1].text, row.rhs)) {
      throw ParseError("row " + row.name + " has a non-numeric right-hand side",
                       constraint_tokens[pos + 1].line);
    }
    pos += 2;
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

// ---------------------------------------------------------------------------
// Points
// ---------------------------------------------------------------------------

namespace {

bool ordered(double p, double q, const std::string& what) {
  if (std::abs(p - q) <= kTolerance) {
    throw AmbiguousOrder(what + " coincide at " + number(p));
  }
  return p < q;
}

}  // namespace

Point derive_binaries(const Model& model, const Instance& instance,
                      const Solution& solution) {
  const auto aligned = align_assignments(instance, solution);
  const std::size_t n = instance.size();
  const std::size_t nc = instance.current.size();
  const double eps = instance.hangar.eps_t;
  const double buf = instance.hangar.buffer;
  Point p(model.variables.size(), std::nan(""));
  auto set = [&](const std::string& name, double v) { p[model.index_of(name)] = v; };
  auto is_f = [&](std::size_t i) { return i >= nc; };

  std::vector<bool> acc(n);
  std::vector<Rect> rect(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = instance.at(i);
    const auto& a = *aligned[i];
    acc[i] = a.accept;
    rect[i] = footprint(s, a);
    const bool on = a.accept;
    set(name1("X", s.id), on ? a.x : 0.0);
    set(name1("Y", s.id), on ? a.y : 0.0);
    set(name1("Roll_in", s.id), on ? a.roll_in : 0.0);
    set(name1("Roll_out", s.id), on ? a.roll_out : 0.0);
    if (is_f(i)) set(name1("D_arr", s.id), on ? std::max(0.0, a.roll_in - s.eta) : 0.0);
    set(name1("D_dep", s.id), on ? std::max(0.0, a.roll_out - s.etd) : 0.0);
    set(name1("Accept", s.id), on ? 1.0 : 0.0);
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& a = *aligned[i];
      const auto& b = *aligned[j];
      const bool both = acc[i] && acc[j];
      const bool co = both && overlaps({a.roll_in, a.roll_out}, {b.roll_in, b.roll_out});
      const std::string& ai = a.aircraft_id;
      const std::string& bj = b.aircraft_id;
      set(name2("Right", ai, bj), co && right_of(rect[i], rect[j], buf) ? 1.0 : 0.0);
      set(name2("Above", ai, bj), co && above(rect[i], rect[j], buf) ? 1.0 : 0.0);
      set(name2("OutIn", ai, bj),
          both && a.roll_out + eps <= b.roll_in + kTolerance ? 1.0 : 0.0);

      double inin = 0.0;
      if (!is_f(i)) {
        inin = 1.0;
      } else if (is_f(j) && both) {
        inin = ordered(a.roll_in, b.roll_in, "roll-ins of " + ai + " and " + bj) ? 1.0 : 0.0;
      }
      set(name2("InIn", ai, bj), inin);

      if (i < j) {
        set(name2("OutOut", ai, bj),
            both && ordered(a.roll_out, b.roll_out, "roll-outs of " + ai + " and " + bj)
                ? 1.0
                : 0.0);
      }
      if (is_f(i) || is_f(j)) {
        set(name2("InOut", ai, bj),
            both && ordered(a.roll_in, b.roll_out,
                            "roll-in of " + ai + " and roll-out of " + bj)
                ? 1.0
                : 0.0);
      }
    }
  }
  return p;
}

std::vector<RowViolation> check_satisfaction(const Model& model, const Point& point) {
  if (point.size() != model.variables.size()) {
    throw MissingVariable("point has " + std::to_string(point.size()) + " values for " +
                          std::to_string(model.variables.size()) + " variables");
  }
  for (std::size_t k = 0; k < point.size(); ++k) {
    if (std::isnan(point[k])) {
      throw MissingVariable("no value for " + model.variables[k].name);
    }
  }

  std::vector<RowViolation> out;
  for (std::size_t k = 0; k < point.size(); ++k) {
    const auto& v = model.variables[k];
    const double x = point[k];
    double residual = std::max(v.lb - x, x - v.ub);
    if (v.kind == VarKind::Binary) {
      residual = std::max(residual, std::min(std::abs(x), std::abs(x - 1.0)));
    }
    if (residual > kTolerance) out.push_back({v.bound_tag + "(" + v.name + ")", residual});
  }
  for (const auto& r : model.rows) {
    double lhs = 0.0;
    for (const auto& t : r.terms) lhs += t.coef * point[t.var];
    double residual = 0.0;
    switch (r.sense) {
      case Sense::Le: residual = lhs - r.rhs; break;
      case Sense::Ge: residual = r.rhs - lhs; break;
      case Sense::Eq: residual = std::abs(lhs - r.rhs); break;
    }
    if (residual > kTolerance) out.push_back({r.name, residual});
  }
  return out;
}

double objective_value(const Model& model, const Point& point) {
  double z = model.objective_offset;
  for (const auto& t : model.objective) z += t.coef * point.at(t.var);
  return z;
}

Point parse_point(const Model& model, std::string_view text) {
  Point p(model.variables.size(), std::nan(""));
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto cut = raw.find('#'); cut != std::string::npos) raw.erase(cut);
    std::istringstream words(raw);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError("expected `name value`", line_no);
    }
    auto it = model.by_name.find(tokens[0]);
    if (it == model.by_name.end()) {
      throw ParseError("unknown variable " + tokens[0], line_no, tokens[0]);
    }
    double value = 0.0;
    if (!parse_number(tokens[1], value) || !std::isfinite(value)) {
      throw ParseError("malformed value for " + tokens[0], line_no, tokens[0]);
    }
    if (!std::isnan(p[it->second])) {
      throw ParseError("duplicate value for " + tokens[0], line_no, tokens[0]);
    }
    p[it->second] = value;
  }
  for (const auto& id : model.ids) {
    for (const char* base : {"X", "Y", "Roll_in", "Roll_out", "Accept"}) {
      const std::string nm = name1(base, id);
      if (std::isnan(p[model.index_of(nm)])) {
        throw ParseError("listing has no value for " + nm, line_no, nm);
      }
    }
  }
  for (auto& v : p) {
    if (std::isnan(v)) v = 0.0;
  }
  return p;
}

Solution import_solution(const Model& model, const Instance& instance,
                         std::string_view listing) {
  const Point p = parse_point(model, listing);
  auto value = [&](const char* base, const std::string& id) {
    return p[model.index_of(name1(base, id))];
  };
  Solution s;
  s.instance_label = instance.label;
  s.provenance = Provenance::Imported;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const auto& spec = instance.at(i);
    if (value("Accept", spec.id) > 0.5) {
      s.assignments.push_back(make_accepted(spec, value("X", spec.id), value("Y", spec.id),
                                            value("Roll_in", spec.id),
                                            value("Roll_out", spec.id)));
    } else {
      s.assignments.push_back(make_rejected(spec));
    }
  }
  auto report = validator::validate(instance, s);
  if (!report.feasible) {
    throw InfeasibleImport("imported point is infeasible (" +
                               std::to_string(report.violations.size()) + " violations)",
                           std::move(report));
  }
  return s;
}

}  // namespace hangar::milp
