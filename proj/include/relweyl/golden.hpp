#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "relweyl/root_system.hpp"

namespace relweyl {

enum class TableSource { Transcribed, Computed };
std::string to_string(TableSource s);

// CSV with "# key: value" header lines; cells hold "p/q" rationals or
// space-separated rational vectors. Blank cells are empty strings.
struct GoldenTable {
  std::string table_id;
  TableSource source = TableSource::Computed;
  std::vector<std::string> notes;  // extra "# ..." lines, kept verbatim
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const;  // throws if absent
  const std::string& cell(std::size_t row, const std::string& name) const { return rows[row][column(name)]; }
};

GoldenTable read_golden(const std::filesystem::path& path);
GoldenTable parse_golden(std::istream& in, const std::string& origin);
void write_golden(const GoldenTable& table, std::ostream& out);

enum class MatchRule { Exact, PositiveTermsOnly };

struct TableSpec {
  std::string table_id;
  std::optional<TypeLabel> type;  // for --only filtering; empty = spans types
  MatchRule rule;
  std::vector<std::string> key_columns;
};

// Every golden table reproduce-all knows how to recompute.
const std::vector<TableSpec>& golden_specs();
const TableSpec& golden_spec(const std::string& table_id);

// Computed counterpart of a golden table, same schema.
GoldenTable compute_table(const std::string& table_id);

// One row per positive root and removed label; term cells blank when c_removed = 0.
GoldenTable normalization_table(const SystemPtr& sys, const std::vector<SimpleRootLabel>& removed);
GoldenTable action_golden_table(const SystemPtr& sys, const std::vector<SimpleRootLabel>& removed);
// Piece index of every positive root for each Way of one removed label.
GoldenTable ways_table(const SystemPtr& sys, SimpleRootLabel removed);

struct Erratum {
  std::string table_id;
  std::string key;     // row key as used in diffs
  std::string column;
  std::string printed;
  std::string corrected;
};

std::vector<Erratum> read_errata(const std::filesystem::path& path);

struct CellDiff {
  std::string table_id;
  std::string key;
  std::string column;
  std::string golden;
  std::string computed;
  std::string str() const;
};

struct TableComparison {
  std::string table_id;
  std::size_t cells_checked = 0;
  std::vector<CellDiff> diffs;
  std::vector<std::string> errata_applied;
  bool ok() const { return diffs.empty(); }
};

TableComparison compare_tables(const TableSpec& spec, const GoldenTable& golden, const GoldenTable& computed,
                               const std::vector<Erratum>& errata);

std::filesystem::path default_data_dir();

}  // namespace relweyl
