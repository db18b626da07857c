#include "relweyl/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "relweyl/json_io.hpp"
#include "relweyl/parallel.hpp"

namespace relweyl {

namespace {

SimpleRootLabel checked_label(const RootSystem& sys, std::string_view text) {
  auto l = parse_label(text);
  if (!sys.has_label(l)) {
    throw std::invalid_argument("label " + std::string(text) + " is not a simple root of " + to_string(sys.type()));
  }
  return l;
}

// Writes content to <out_dir>/<name> when an output directory is set, else to out.
void emit(const Settings& s, const std::string& name, const std::string& content, std::ostream& out) {
  if (!s.out_dir) {
    out << content;
    return;
  }
  std::filesystem::create_directories(*s.out_dir);
  auto path = *s.out_dir / name;
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
  out << "wrote " << path.string() << "\n";
}

bool same_type(const GoldenTable& t, std::size_t row, TypeLabel type) { return t.cell(row, "type") == to_string(type); }

GoldenTable only_type(GoldenTable t, TypeLabel type) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (same_type(t, r, type)) rows.push_back(t.rows[r]);
  }
  t.rows = std::move(rows);
  return t;
}

// Distinct spellings of offending factors; untwisted ones read as s + shift.
std::set<std::string> term_strings(const std::vector<ZeroFactor>& fs) {
  std::set<std::string> out;
  for (const auto& f : fs) out.insert(f.str());
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string ways_str(const std::vector<int>& ways) {
  std::vector<std::string> xs;
  for (int w : ways) xs.push_back(std::to_string(w));
  return join(xs, ",");
}

}  // namespace

Settings load_settings(const std::optional<std::filesystem::path>& config_file) {
  Settings s;
  if (config_file) {
    std::ifstream in(*config_file);
    if (!in) throw std::invalid_argument("cannot read config " + config_file->string());
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("bad config " + config_file->string() + ": " + e.what());
    }
    for (const auto& [k, v] : j.items()) {
      if (k == "out_dir") {
        s.out_dir = std::filesystem::path(v.get<std::string>());
      } else if (k == "jobs") {
        int n = v.get<int>();
        if (n < 1) throw std::invalid_argument("config jobs must be >= 1");
        s.jobs = static_cast<unsigned>(n);
      } else if (k == "data_dir") {
        s.data_dir = std::filesystem::path(v.get<std::string>());
      } else {
        throw std::invalid_argument("unknown config key " + k);
      }
    }
  }
  if (const char* env = std::getenv(kOutDirEnv); env != nullptr && *env != '\0') s.out_dir = std::filesystem::path(env);
  return s;
}

std::vector<int> parse_ways(std::string_view text) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty() || cur.size() > 3 || cur.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad way list: " + std::string(text));
    }
    out.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (c != ' ') {
      cur += c;
    }
  }
  flush();
  return out;
}

int cmd_show(std::string_view type, std::ostream& out) {
  render_system(*build_root_system(parse_type(type)), out);
  return kExitOk;
}

int cmd_action_table(const Settings& s, std::string_view type, std::string_view removed, Format f, std::ostream& out) {
  auto sys = build_root_system(parse_type(type));
  auto l = checked_label(*sys, removed);
  std::ostringstream buf;
  render_action_table(sys, l, f, buf);
  emit(s, to_string(sys->type()) + "-action-a" + std::to_string(l.index) + "." + extension(f), buf.str(), out);
  return kExitOk;
}

int cmd_decompose(const Settings& s, std::string_view type, std::string_view removed, int way, Format f,
                  std::ostream& out) {
  auto sys = build_root_system(parse_type(type));
  auto l = checked_label(*sys, removed);
  auto trace = run_algorithm(sys, l, way);
  std::ostringstream buf;
  render_trace(trace, f, buf);
  emit(s, to_string(sys->type()) + "-a" + std::to_string(l.index) + "-way" + std::to_string(way) + "." + extension(f),
       buf.str(), out);
  auto report = verify_properties(trace);
  report.merge(verify_proposition(trace));
  for (const auto& m : report.failures) out << "check failed: " << m << "\n";
  return report.ok ? kExitOk : kExitMismatch;
}

int cmd_normtable(const Settings& s, std::string_view type, std::string_view removed, Format f, std::ostream& out) {
  auto sys = build_root_system(parse_type(type));
  auto l = checked_label(*sys, removed);
  if (!has_steinberg_datum(sys->type(), l)) {
    throw std::invalid_argument("no published exponent for " + to_string(sys->type()) + " " + to_string(l));
  }
  std::ostringstream buf;
  render_normtable(sys, l, f, buf);
  emit(s, to_string(sys->type()) + "-normalization-a" + std::to_string(l.index) + "." + extension(f), buf.str(), out);
  return kExitOk;
}

int cmd_verify(const Settings& s, std::string_view type, std::string_view removed, const std::vector<int>& ways,
               ImaginaryBranch branch, std::ostream& out) {
  auto sys = build_root_system(parse_type(type));
  auto l = checked_label(*sys, removed);
  if (!has_steinberg_datum(sys->type(), l)) {
    throw std::invalid_argument("no published exponent for " + to_string(sys->type()) + " " + to_string(l));
  }
  for (int w : ways) way_beta(*sys, l, w);  // range check before any work
  auto report = check_main_theorem(sys, l, ways, branch);
  emit(s, to_string(sys->type()) + "-a" + std::to_string(l.index) + "-verify.json",
       nlohmann::json(record_of(report)).dump(2) + "\n", out);
  return report.verdict == Verdict::HolomorphicVerified ? kExitOk : kExitMismatch;
}

int cmd_reproduce_all(const Settings& s, std::optional<TypeLabel> only, std::ostream& out) {
  std::vector<const TableSpec*> specs;
  for (const auto& spec : golden_specs()) {
    if (!only || !spec.type || *spec.type == *only) specs.push_back(&spec);
  }
  auto errata = read_errata(s.data_dir / "errata.csv");

  struct Outcome {
    TableComparison cmp;
    GoldenTable computed;
  };
  auto outcomes = parallel_map<Outcome>(specs.size(), s.jobs, [&](std::size_t i) {
    const auto& spec = *specs[i];
    Outcome o;
    o.computed = compute_table(spec.table_id);
    GoldenTable golden;
    try {
      golden = read_golden(s.data_dir / (spec.table_id + ".csv"));
    } catch (const std::exception& e) {
      o.cmp = TableComparison{spec.table_id, 0, {{spec.table_id, "<file>", "<file>", e.what(), ""}}, {}};
      return o;
    }
    if (golden.table_id != spec.table_id) {
      o.cmp = TableComparison{spec.table_id, 0, {{spec.table_id, "<file>", "table_id", golden.table_id, spec.table_id}}, {}};
      return o;
    }
    if (only && !spec.type) {
      golden = only_type(std::move(golden), *only);
      o.computed = only_type(std::move(o.computed), *only);
    }
    o.cmp = compare_tables(spec, golden, o.computed, errata);
    return o;
  });

  bool ok = true;
  std::size_t cells = 0;
  for (const auto& o : outcomes) {
    cells += o.cmp.cells_checked;
    out << (o.cmp.ok() ? "PASS " : "FAIL ") << o.cmp.table_id << " (" << o.cmp.cells_checked << " cells)\n";
    for (const auto& e : o.cmp.errata_applied) out << "  erratum " << e << "\n";
    for (const auto& d : o.cmp.diffs) out << "  diff " << d.str() << "\n";
    ok = ok && o.cmp.ok();
    if (s.out_dir) {
      std::ostringstream buf;
      write_golden(o.computed, buf);
      emit(s, o.computed.table_id + ".csv", buf.str(), out);
    }
  }
  out << (ok ? "all tables reproduced" : "MISMATCH") << " (" << outcomes.size() << " tables, " << cells
      << " cells)\n";
  return ok ? kExitOk : kExitMismatch;
}

std::vector<ClaimOutcome> evaluate_claims(unsigned jobs) {
  const auto& claims = published_claims();
  return parallel_map<ClaimOutcome>(claims.size(), jobs, [&](std::size_t i) {
    const auto& c = claims[i];
    ClaimOutcome o{c, check_main_theorem(build_root_system(c.type), c.removed, c.ways, c.branch), false};
    o.matches = o.report.verdict == c.expected;
    if (c.expected != Verdict::HolomorphicVerified) {
      std::set<std::string> want;
      for (const auto& t : c.expected_gcd_positive) want.insert(t.str());
      o.matches = o.matches && term_strings(o.report.offending) == want;
    }
    return o;
  });
}

int cmd_verify_paper_claims(const Settings& s, std::ostream& out) {
  auto outcomes = evaluate_claims(s.jobs);
  bool ok = true;
  nlohmann::json all = nlohmann::json::array();
  for (const auto& o : outcomes) {
    const auto& r = o.report;
    out << (o.matches ? "ok   " : "FAIL ") << to_string(r.type) << " " << to_string(r.removed) << " ways "
        << ways_str(r.ways_used) << " nu_I " << to_string(r.branch) << ": " << to_string(r.verdict);
    if (!o.matches) out << " (expected " << to_string(o.claim.expected) << ")";
    if (!r.offending.empty()) {
      std::vector<std::string> names;
      for (const auto& f : r.offending) names.push_back(f.str());
      out << " by " << join(names, " ");
    }
    out << "\n";
    ok = ok && o.matches;
    all.push_back(record_of(r));
  }
  out << (ok ? "all claims reproduced" : "MISMATCH") << " (" << outcomes.size() << " claims)\n";
  if (s.out_dir) emit(s, "claims.json", all.dump(2) + "\n", out);
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace relweyl
