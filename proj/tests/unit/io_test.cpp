#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "relweyl/commands.hpp"
#include "relweyl/json_io.hpp"

using namespace relweyl;
using testing_helpers::L;
namespace fs = std::filesystem;

namespace {

// Fresh copy of the bundled golden tables.
fs::path scratch_data(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("relweyl-" + name);
  fs::remove_all(dir);
  fs::copy(default_data_dir(), dir);
  return dir;
}

void replace_in_file(const fs::path& p, const std::string& from, const std::string& to) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  auto text = buf.str();
  auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  text.replace(at, from.size(), to);
  std::ofstream(p) << text;
}

template <class T>
T round_trip(const T& x) {
  return nlohmann::json::parse(nlohmann::json(x).dump()).template get<T>();
}

}  // namespace

TEST_CASE("golden tables parse and re-serialize") {
  auto t = read_golden(default_data_dir() / "G2-normalization.csv");
  CHECK(t.table_id == "G2-normalization");
  CHECK(t.source == TableSource::Transcribed);
  CHECK(t.rows.size() == 12);
  std::stringstream out;
  write_golden(t, out);
  auto back = parse_golden(out, "memory");
  CHECK(back.columns == t.columns);
  CHECK(back.rows == t.rows);
  std::istringstream bad("# table_id: x\na,b\n1\n");
  CHECK_THROWS(parse_golden(bad, "bad"));
}

TEST_CASE("pristine data reproduces") {
  Settings s;
  s.jobs = 4;
  std::ostringstream out;
  CHECK(cmd_reproduce_all(s, std::nullopt, out) == kExitOk);
  CHECK(out.str().find("all tables reproduced") != std::string::npos);
  CHECK(out.str().find("erratum") != std::string::npos);
}

TEST_CASE("a corrupted cell fails and is named") {
  Settings s;
  s.data_dir = scratch_data("corrupt");
  replace_in_file(s.data_dir / "F4-normalization.csv", "0 1 -1 0,1 0 0 0,1,1,-3,-1,4", "0 1 -1 0,1 0 0 0,1,1,-4,-1,4");
  std::ostringstream out;
  CHECK(cmd_reproduce_all(s, std::nullopt, out) == kExitMismatch);
  CHECK(out.str().find("FAIL F4-normalization") != std::string::npos);
  CHECK(out.str().find("[0 1 -1 0|1] s_intercept: golden '-4' computed '-3'") != std::string::npos);
  fs::remove_all(s.data_dir);
}

TEST_CASE("removing the erratum exposes the misprinted cell") {
  Settings s;
  s.data_dir = scratch_data("errata");
  std::ofstream(s.data_dir / "errata.csv") << "# table_id: errata\n# source: transcribed\ntable_id,key,column,printed,corrected\n";
  std::ostringstream out;
  CHECK(cmd_reproduce_all(s, std::nullopt, out) == kExitMismatch);
  CHECK(out.str().find("FAIL E6-normalization") != std::string::npos);
  CHECK(out.str().find("one_minus_s_intercept") != std::string::npos);
  fs::remove_all(s.data_dir);
}

TEST_CASE("--only restricts the scope") {
  Settings s;
  std::ostringstream out;
  CHECK(cmd_reproduce_all(s, TypeLabel::F4, out) == kExitOk);
  CHECK(out.str().find("F4-normalization") != std::string::npos);
  CHECK(out.str().find("F4-ways") != std::string::npos);
  CHECK(out.str().find("E6") == std::string::npos);
  CHECK(out.str().find("G2") == std::string::npos);
}

TEST_CASE("outputs go to the configured directory") {
  auto dir = fs::temp_directory_path() / "relweyl-out";
  fs::remove_all(dir);
  auto cfg = fs::temp_directory_path() / "relweyl-config.json";
  std::ofstream(cfg) << "{\"out_dir\": \"" << dir.string() << "\", \"jobs\": 2}";
  auto s = load_settings(cfg);
  CHECK(s.jobs == 2);
  std::ostringstream out;
  CHECK(cmd_normtable(s, "G2", "1", Format::Csv, out) == kExitOk);
  CHECK(fs::exists(dir / "G2-normalization-a1.csv"));
  std::ofstream(cfg) << "{\"colour\": 1}";
  CHECK_THROWS_AS(load_settings(cfg), std::invalid_argument);
  fs::remove_all(dir);
  fs::remove(cfg);
}

TEST_CASE("command errors") {
  Settings s;
  std::ostringstream out;
  CHECK_THROWS_AS(cmd_show("X9", out), std::invalid_argument);
  CHECK_THROWS_AS(cmd_normtable(s, "E6", "4", Format::Csv, out), std::invalid_argument);
  CHECK_THROWS_AS(cmd_verify(s, "F4", "1", {4}, ImaginaryBranch::Trivial, out), std::invalid_argument);
  CHECK_THROWS_AS(cmd_decompose(s, "G2", "1", 1, Format::Csv, out), std::invalid_argument);
  CHECK(parse_ways("1, 3") == std::vector<int>{1, 3});
  CHECK_THROWS(parse_ways("1,,3"));
  CHECK(cmd_verify(s, "E8", "8", {1, 2, 3, 4, 5, 6, 7}, ImaginaryBranch::Trivial, out) == kExitMismatch);
}

TEST_CASE("json records round-trip") {
  for (auto t : exceptional_types()) {
    auto rec = record_of(*build_root_system(t));
    CHECK(round_trip(rec) == rec);
  }
  auto f4 = build_root_system(TypeLabel::F4);
  for (int way = 1; way <= 3; ++way) {
    auto rec = record_of(run_algorithm(f4, L(1), way));
    CHECK(round_trip(rec) == rec);
  }
  auto rank_one = record_of(run_algorithm(sub_system(f4, {L(1)}), L(1), 1));
  CHECK_FALSE(rank_one.steps[0].tau_cut.has_value());
  CHECK(round_trip(rank_one) == rank_one);
  auto report = record_of(check_main_theorem(build_root_system(TypeLabel::G2), L(1), {1}, ImaginaryBranch::Trivial));
  CHECK(report.verdict == "REQUIRES_REPRESENTATION_THEORY");
  CHECK(round_trip(report) == report);
  CHECK(round_trip(Rational(-7, 3)) == Rational(-7, 3));
}
