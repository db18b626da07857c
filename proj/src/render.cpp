#include "relweyl/render.hpp"

#include <ostream>
#include <stdexcept>

#include "relweyl/golden.hpp"
#include "relweyl/json_io.hpp"
#include "relweyl/normalization.hpp"
#include "relweyl/weyl.hpp"

namespace relweyl {

namespace {

std::string latex_vector(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) out += (i ? "," : "") + latex(v[i]);
  return out + ")";
}

std::string tuple_str(const std::vector<long long>& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out + ")";
}

std::string labels_str(const std::vector<SimpleRootLabel>& ls) {
  std::string out;
  for (std::size_t i = 0; i < ls.size(); ++i) out += (i ? " " : "") + to_string(ls[i]);
  return out;
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  if (text == "latex") return Format::Latex;
  if (text == "table") return Format::Table;
  throw std::invalid_argument("unknown format: " + std::string(text));
}

std::string extension(Format f) {
  switch (f) {
    case Format::Csv: return "csv";
    case Format::Json: return "json";
    case Format::Latex: return "tex";
    case Format::Table: return "txt";
  }
  return "txt";
}

std::string latex(const Rational& r) {
  if (r.is_integer()) return r.str();
  std::string sign = r.sign() < 0 ? "-" : "";
  Rational a = r.sign() < 0 ? -r : r;
  return sign + "\\frac{" + a.numerator().str() + "}{" + a.denominator().str() + "}";
}

std::string latex(const LinearTerm& t) {
  auto coef = [](const Rational& a) {
    if (a == Rational(1)) return std::string("s");
    if (a == Rational(-1)) return std::string("-s");
    return latex(a) + "s";
  };
  if (t.slope.sign() == 0) return latex(t.intercept);
  if (t.slope.sign() > 0) {
    std::string out = coef(t.slope);
    if (t.intercept.sign() > 0) out += "+" + latex(t.intercept);
    if (t.intercept.sign() < 0) out += latex(t.intercept);
    return out;
  }
  if (t.intercept.sign() == 0) return coef(t.slope);
  return latex(t.intercept) + coef(t.slope);
}

void render_system(const RootSystem& sys, std::ostream& out) {
  out << "type " << to_string(sys.type()) << "\n";
  out << "simple roots " << sys.rank() << "\n";
  for (const auto& s : sys.delta()) out << "  " << to_string(s.label) << " = " << s.ambient << "\n";
  out << "positive roots " << sys.positive_roots().size() << "\n";
  out << "dynkin adjacency\n";
  for (const auto& s : sys.delta()) {
    out << "  " << to_string(s.label) << ":";
    for (const auto& t : sys.delta()) {
      if (s.label == t.label) continue;
      auto c = pairing(s.ambient, t.ambient);
      if (c.sign() != 0) out << " " << to_string(t.label) << "(" << c << ")";
    }
    out << "\n";
  }
}

void render_action_table(const SystemPtr& sys, SimpleRootLabel removed, Format f, std::ostream& out) {
  auto entries = action_table(sys, removed);
  switch (f) {
    case Format::Csv:
      write_golden(action_golden_table(sys, {removed}), out);
      return;
    case Format::Json: {
      nlohmann::json j = {{"type", to_string(sys->type())}, {"removed", removed.index}, {"rows", nlohmann::json::array()}};
      for (const auto& e : entries) {
        j["rows"].push_back({{"simple_root", e.label.index}, {"image", e.image}, {"simple_coords", e.simple_coords}});
      }
      out << j.dump(2) << "\n";
      return;
    }
    case Format::Latex:
      out << "\\begin{longtable}{|c|c|}\n\\hline\n & $\\{\\alpha_{" << removed.index << "}\\}$ \\\\\n\\hline\n";
      for (const auto& e : entries) out << "$\\alpha_{" << e.label.index << "}$ & $" << tuple_str(e.simple_coords) << "$ \\\\\n";
      out << "\\hline\n\\end{longtable}\n";
      return;
    case Format::Table:
      for (const auto& e : entries) out << to_string(e.label) << " -> " << tuple_str(e.simple_coords) << "\n";
      return;
  }
}

void render_normtable(const SystemPtr& sys, SimpleRootLabel removed, Format f, std::ostream& out) {
  auto datum = steinberg_datum(sys, removed);
  switch (f) {
    case Format::Csv:
      write_golden(normalization_table(sys, {removed}), out);
      return;
    case Format::Json: {
      nlohmann::json j = {{"type", to_string(sys->type())},
                          {"removed", removed.index},
                          {"nu_r", datum.nu_r},
                          {"alpha_tilde", datum.alpha_tilde},
                          {"rows", nlohmann::json::array()}};
      for (const auto& root : sys->positive_roots()) {
        nlohmann::json row = {{"root", root.ambient}, {"simple_coords", root.simple_coords}};
        if (sys->coeff(root, removed) == 0) {
          row["s_term"] = nullptr;
          row["one_minus_s_term"] = nullptr;
        } else {
          auto t = s_term(datum, root);
          row["s_term"] = {{"slope", t.slope}, {"intercept", t.intercept}, {"text", t.str()}};
          auto o = t.one_minus();
          row["one_minus_s_term"] = {{"slope", o.slope}, {"intercept", o.intercept}, {"text", o.str()}};
        }
        j["rows"].push_back(std::move(row));
      }
      out << j.dump(2) << "\n";
      return;
    }
    case Format::Latex:
    case Format::Table: {
      const bool tex = f == Format::Latex;
      if (tex) {
        out << "\\begin{longtable}{|c|c|c|c|}\n\\hline\nroot & simple coordinates & $s$ & $1-s$ \\\\\n\\hline\n";
      }
      for (const auto& root : sys->positive_roots()) {
        std::string s, o;
        if (sys->coeff(root, removed) != 0) {
          auto t = s_term(datum, root);
          s = tex ? "$" + latex(t) + "$" : t.str();
          o = tex ? "$" + latex(t.one_minus()) + "$" : t.one_minus().str();
        }
        if (tex) {
          out << "$" << latex_vector(root.ambient) << "$ & $" << tuple_str(root.simple_coords) << "$ & " << s << " & " << o
              << " \\\\\n";
        } else {
          out << root.ambient << "  " << tuple_str(root.simple_coords) << "  " << s << "  " << o << "\n";
        }
      }
      if (tex) out << "\\hline\n\\end{longtable}\n";
      return;
    }
  }
}

void render_trace(const DecompositionTrace& trace, Format f, std::ostream& out) {
  if (f == Format::Json) {
    out << nlohmann::json(record_of(trace)).dump(2) << "\n";
    return;
  }
  if (f != Format::Table) throw std::invalid_argument("decompose supports json and table formats");
  const auto& sys = *trace.system;
  out << to_string(sys.type()) << " removed " << to_string(trace.removed) << " way " << trace.way;
  if (trace.beta) out << " (beta " << to_string(*trace.beta) << ")";
  out << "\n";
  for (const auto& st : trace.steps) {
    out << "step " << st.step_index << ": delta {" << labels_str(st.ambient_delta) << "} tau_in " << to_string(st.tau_in);
    if (st.tau_cut) out << " tau_cut " << to_string(*st.tau_cut);
    out << " tau_next " << to_string(st.tau_next) << "\n";
    out << "  word [" << labels_str(st.word.letters) << "] length " << st.word.letters.size() << "\n";
    out << "  S_" << st.step_index << " = " << describe_root_set(sys, st.s_piece) << "\n";
  }
  out << "total length " << trace.total_word.letters.size() << "\n";
}

}  // namespace relweyl
