#include "relweyl/golden.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "relweyl/decomposition.hpp"
#include "relweyl/normalization.hpp"
#include "relweyl/weyl.hpp"

namespace relweyl {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && s[i] == ' ') ++i;
  return s.substr(i);
}

std::string coords_str(const std::vector<long long>& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + std::to_string(c[i]);
  return out;
}

std::string rationals_str(const std::vector<Rational>& c) { return RationalVector(c).str(); }

// Canonical spelling of a cell: rational vectors re-printed, anything else verbatim.
std::string canonical(const std::string& cell) {
  if (cell.empty()) return cell;
  try {
    return RationalVector::parse(cell).str();
  } catch (const std::exception&) {
    return cell;
  }
}

std::string canonical_key(const std::string& key) {
  std::string out;
  auto parts = split(key, '|');
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "|" : "") + canonical(trim(parts[i]));
  return out;
}

std::string row_key(const GoldenTable& t, std::size_t row, const std::vector<std::string>& keys) {
  std::string out;
  for (std::size_t i = 0; i < keys.size(); ++i) out += (i ? "|" : "") + canonical(t.cell(row, keys[i]));
  return out;
}

std::map<std::string, std::size_t> index_rows(const GoldenTable& t, const std::vector<std::string>& keys,
                                              std::vector<CellDiff>& diffs) {
  std::map<std::string, std::size_t> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    auto k = row_key(t, r, keys);
    if (!out.emplace(k, r).second) diffs.push_back({t.table_id, k, "<row>", "duplicate", "duplicate"});
  }
  return out;
}

const char* kTermColumns[] = {"s_slope", "s_intercept", "one_minus_s_slope", "one_minus_s_intercept"};

bool is_term_column(const std::string& c) {
  return std::find(std::begin(kTermColumns), std::end(kTermColumns), c) != std::end(kTermColumns);
}

std::vector<SimpleRootLabel> datum_labels(TypeLabel type) {
  std::vector<SimpleRootLabel> out;
  for (auto l : build_root_system(type)->labels()) {
    if (has_steinberg_datum(type, l)) out.push_back(l);
  }
  return out;
}

GoldenTable nu_r_table() {
  GoldenTable t{"nu-r", TableSource::Computed, {}, {"type", "removed", "ambient", "simple_basis"}, {}};
  for (auto type : exceptional_types()) {
    auto sys = build_root_system(type);
    for (auto l : datum_labels(type)) {
      std::vector<SimpleRootLabel> rest;
      for (auto m : sys->labels()) {
        if (m != l) rest.push_back(m);
      }
      auto rho = sub_system(sys, rest)->rho();
      t.rows.push_back({to_string(type), std::to_string(l.index), rho.str(), rationals_str(sys->frame().coordinates(rho))});
    }
  }
  return t;
}

GoldenTable alpha_tilde_table() {
  GoldenTable t{"alpha-tilde", TableSource::Computed, {}, {"type", "removed", "ambient"}, {}};
  for (auto type : {TypeLabel::G2, TypeLabel::F4}) {
    auto sys = build_root_system(type);
    for (auto l : sys->labels()) {
      t.rows.push_back({to_string(type), std::to_string(l.index), fundamental_weight(*sys, l).str()});
    }
  }
  return t;
}

}  // namespace

std::string to_string(TableSource s) { return s == TableSource::Transcribed ? "transcribed" : "computed"; }

std::size_t GoldenTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw std::invalid_argument("table " + table_id + " has no column " + name);
}

GoldenTable parse_golden(std::istream& in, const std::string& origin) {
  GoldenTable t;
  bool have_source = false;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = trim(line.substr(1));
      if (body.rfind("table_id:", 0) == 0) {
        t.table_id = trim(body.substr(9));
      } else if (body.rfind("source:", 0) == 0) {
        std::string s = trim(body.substr(7));
        if (s == "transcribed") {
          t.source = TableSource::Transcribed;
        } else if (s == "computed") {
          t.source = TableSource::Computed;
        } else {
          throw std::runtime_error(origin + ": unknown source " + s);
        }
        have_source = true;
      } else {
        t.notes.push_back(body);
      }
      continue;
    }
    auto cells = split(line, ',');
    for (auto& c : cells) c = trim(c);
    if (t.columns.empty()) {
      t.columns = std::move(cells);
    } else {
      if (cells.size() != t.columns.size()) {
        throw std::runtime_error(origin + ": row has " + std::to_string(cells.size()) + " cells, expected " +
                                 std::to_string(t.columns.size()));
      }
      t.rows.push_back(std::move(cells));
    }
  }
  if (t.table_id.empty() || !have_source || t.columns.empty()) {
    throw std::runtime_error(origin + ": missing table_id, source or header");
  }
  return t;
}

GoldenTable read_golden(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_golden(in, path.string());
}

void write_golden(const GoldenTable& t, std::ostream& out) {
  out << "# table_id: " << t.table_id << "\n# source: " << to_string(t.source) << "\n";
  for (const auto& n : t.notes) out << "# " << n << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << "\n";
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
    out << "\n";
  }
}

const std::vector<TableSpec>& golden_specs() {
  static const std::vector<TableSpec> specs = {
      {"G2-normalization", TypeLabel::G2, MatchRule::Exact, {"root", "removed"}},
      {"F4-normalization", TypeLabel::F4, MatchRule::Exact, {"root", "removed"}},
      {"E6-normalization", TypeLabel::E6, MatchRule::PositiveTermsOnly, {"root", "removed"}},
      {"E7-normalization", TypeLabel::E7, MatchRule::PositiveTermsOnly, {"root", "removed"}},
      {"F4-ways", TypeLabel::F4, MatchRule::Exact, {"root", "way"}},
      {"E6-action", TypeLabel::E6, MatchRule::Exact, {"removed", "simple_root"}},
      {"E7-action", TypeLabel::E7, MatchRule::Exact, {"removed", "simple_root"}},
      {"E8-action", TypeLabel::E8, MatchRule::Exact, {"removed", "simple_root"}},
      {"nu-r", std::nullopt, MatchRule::Exact, {"type", "removed"}},
      {"alpha-tilde", std::nullopt, MatchRule::Exact, {"type", "removed"}},
  };
  return specs;
}

const TableSpec& golden_spec(const std::string& table_id) {
  for (const auto& s : golden_specs()) {
    if (s.table_id == table_id) return s;
  }
  throw std::invalid_argument("unknown table " + table_id);
}

GoldenTable normalization_table(const SystemPtr& sys, const std::vector<SimpleRootLabel>& removed) {
  GoldenTable t{to_string(sys->type()) + "-normalization", TableSource::Computed, {},
                {"root", "simple_coords", "removed", "s_slope", "s_intercept", "one_minus_s_slope",
                 "one_minus_s_intercept"},
                {}};
  std::vector<SteinbergDatum> data;
  for (auto l : removed) data.push_back(steinberg_datum(sys, l));
  for (const auto& root : sys->positive_roots()) {
    for (const auto& d : data) {
      std::vector<std::string> row{root.ambient.str(), coords_str(root.simple_coords), std::to_string(d.removed.index)};
      if (sys->coeff(root, d.removed) == 0) {
        row.insert(row.end(), 4, "");
      } else {
        auto s = s_term(d, root);
        auto o = s.one_minus();
        row.insert(row.end(), {s.slope.str(), s.intercept.str(), o.slope.str(), o.intercept.str()});
      }
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

GoldenTable action_golden_table(const SystemPtr& sys, const std::vector<SimpleRootLabel>& removed) {
  GoldenTable t{to_string(sys->type()) + "-action", TableSource::Computed,
                {"image = w0^-1(simple_root) in simple coordinates over the frame"},
                {"removed", "simple_root", "image"}, {}};
  for (auto l : removed) {
    for (const auto& e : action_table(sys, l)) {
      t.rows.push_back({std::to_string(l.index), std::to_string(e.label.index), coords_str(e.simple_coords)});
    }
  }
  return t;
}

GoldenTable ways_table(const SystemPtr& sys, SimpleRootLabel removed) {
  GoldenTable t{to_string(sys->type()) + "-ways", TableSource::Computed,
                {"removed = " + std::to_string(removed.index) + "; piece is the index i of S_i, empty outside S"},
                {"root", "simple_coords", "way", "piece"}, {}};
  std::vector<std::vector<std::string>> piece_of(way_count(*sys),
                                                 std::vector<std::string>(sys->positive_roots().size()));
  for (int w = 1; w <= way_count(*sys); ++w) {
    for (const auto& st : run_algorithm(sys, removed, w).steps) {
      for (auto i : st.s_piece) piece_of[w - 1][i] = std::to_string(st.step_index);
    }
  }
  for (std::size_t i = 0; i < sys->positive_roots().size(); ++i) {
    const auto& root = sys->positive_roots()[i];
    for (int w = 1; w <= way_count(*sys); ++w) {
      t.rows.push_back({root.ambient.str(), coords_str(root.simple_coords), std::to_string(w), piece_of[w - 1][i]});
    }
  }
  return t;
}

GoldenTable compute_table(const std::string& table_id) {
  if (table_id == "nu-r") return nu_r_table();
  if (table_id == "alpha-tilde") return alpha_tilde_table();
  if (table_id == "F4-ways") return ways_table(build_root_system(TypeLabel::F4), {1});
  auto dash = table_id.find('-');
  if (dash != std::string::npos) {
    auto type = parse_type(table_id.substr(0, dash));
    auto kind = table_id.substr(dash + 1);
    auto sys = build_root_system(type);
    if (kind == "normalization") return normalization_table(sys, datum_labels(type));
    if (kind == "action") return action_golden_table(sys, sys->labels());
  }
  throw std::invalid_argument("unknown table " + table_id);
}

std::vector<Erratum> read_errata(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return {};
  auto t = read_golden(path);
  std::vector<Erratum> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out.push_back({t.cell(r, "table_id"), canonical_key(t.cell(r, "key")), t.cell(r, "column"), t.cell(r, "printed"),
                   t.cell(r, "corrected")});
  }
  return out;
}

std::string CellDiff::str() const {
  return table_id + " [" + key + "] " + column + ": golden '" + golden + "' computed '" + computed + "'";
}

TableComparison compare_tables(const TableSpec& spec, const GoldenTable& golden, const GoldenTable& computed,
                               const std::vector<Erratum>& errata) {
  TableComparison cmp{spec.table_id, 0, {}, {}};
  auto diff = [&](const std::string& key, const std::string& col, const std::string& g, const std::string& c) {
    cmp.diffs.push_back({spec.table_id, key, col, g, c});
  };
  if (golden.columns != computed.columns) diff("<header>", "<columns>", "golden schema", "computed schema");
  if (!cmp.diffs.empty()) return cmp;

  auto grows = index_rows(golden, spec.key_columns, cmp.diffs);
  auto crows = index_rows(computed, spec.key_columns, cmp.diffs);
  const bool terms_only = spec.rule == MatchRule::PositiveTermsOnly;

  for (const auto& [key, gr] : grows) {
    auto it = crows.find(key);
    if (it == crows.end()) {
      diff(key, "<row>", "present", "missing");
      continue;
    }
    const std::size_t cr = it->second;
    bool golden_blank = terms_only && golden.cell(gr, "s_slope").empty();
    for (const auto& col : golden.columns) {
      if (std::find(spec.key_columns.begin(), spec.key_columns.end(), col) != spec.key_columns.end()) continue;
      ++cmp.cells_checked;
      std::string g = canonical(golden.cell(gr, col));
      std::string c = canonical(computed.cell(cr, col));
      if (terms_only && is_term_column(col)) {
        // Blank: the computed s-term must be absent or non-positive.
        // Populated: must be a positive term.
        LinearTerm s{};
        bool computed_blank = computed.cell(cr, "s_slope").empty();
        if (!computed_blank) {
          s = {Rational::parse(computed.cell(cr, "s_slope")), Rational::parse(computed.cell(cr, "s_intercept"))};
        }
        if (golden_blank) {
          if (!g.empty()) diff(key, col, g, c);
          if (!computed_blank && s.is_positive_term() && col == "s_slope") diff(key, col, "", "positive " + s.str());
          continue;
        }
        if ((computed_blank || !s.is_positive_term()) && col == "s_slope") diff(key, col, g, "non-positive " + c);
      }
      if (g == c) continue;
      auto e = std::find_if(errata.begin(), errata.end(), [&](const Erratum& x) {
        return x.table_id == spec.table_id && x.key == key && x.column == col;
      });
      if (e != errata.end() && canonical(e->printed) == g && canonical(e->corrected) == c) {
        cmp.errata_applied.push_back(key + " " + col + ": printed " + g + ", computed " + c);
        continue;
      }
      diff(key, col, golden.cell(gr, col), computed.cell(cr, col));
    }
  }
  for (const auto& [key, cr] : crows) {
    if (!grows.count(key)) diff(key, "<row>", "missing", "present");
  }
  return cmp;
}

std::filesystem::path default_data_dir() { return RELWEYL_GOLDEN_DIR; }

}  // namespace relweyl
