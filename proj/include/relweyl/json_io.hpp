#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "relweyl/decomposition.hpp"
#include "relweyl/normalization.hpp"
#include "relweyl/root_system.hpp"

namespace relweyl {

// Plain records mirroring the exported JSON; rationals travel as "p/q" strings.

struct SimpleRootRecord {
  int label = 0;
  RationalVector ambient;
  friend bool operator==(const SimpleRootRecord&, const SimpleRootRecord&) = default;
};

struct RootRecord {
  RationalVector ambient;
  std::vector<long long> simple_coords;
  friend bool operator==(const RootRecord&, const RootRecord&) = default;
};

struct RootSystemRecord {
  std::string type;
  std::vector<SimpleRootRecord> delta;
  std::vector<RootRecord> positive_roots;
  friend bool operator==(const RootSystemRecord&, const RootSystemRecord&) = default;
};

struct StepRecord {
  std::vector<int> delta;
  int tau_in = 0;
  std::optional<int> tau_cut;
  int tau_next = 0;
  std::vector<int> word;
  std::vector<std::vector<long long>> s_piece;
  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct TraceRecord {
  std::string type;
  int removed = 0;
  int way = 0;
  std::vector<StepRecord> steps;
  std::size_t total_length = 0;
  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct WayDiscrepancy {
  int way = 0;
  std::vector<std::string> terms;
  friend bool operator==(const WayDiscrepancy&, const WayDiscrepancy&) = default;
};

struct ReportRecord {
  std::string type;
  int removed = 0;
  std::vector<int> ways;
  std::string branch;
  std::string verdict;
  std::vector<std::string> gcd_terms;
  std::vector<std::string> offending;
  std::vector<WayDiscrepancy> per_way_discrepancies;
  std::vector<std::string> trace_digests;
  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

RootSystemRecord record_of(const RootSystem& sys);
TraceRecord record_of(const DecompositionTrace& trace);
ReportRecord record_of(const VerificationReport& report);

void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);
void to_json(nlohmann::json& j, const RationalVector& v);
void from_json(const nlohmann::json& j, RationalVector& v);
void to_json(nlohmann::json& j, const SimpleRootRecord& r);
void from_json(const nlohmann::json& j, SimpleRootRecord& r);
void to_json(nlohmann::json& j, const RootRecord& r);
void from_json(const nlohmann::json& j, RootRecord& r);
void to_json(nlohmann::json& j, const RootSystemRecord& r);
void from_json(const nlohmann::json& j, RootSystemRecord& r);
void to_json(nlohmann::json& j, const StepRecord& r);
void from_json(const nlohmann::json& j, StepRecord& r);
void to_json(nlohmann::json& j, const TraceRecord& r);
void from_json(const nlohmann::json& j, TraceRecord& r);
void to_json(nlohmann::json& j, const WayDiscrepancy& r);
void from_json(const nlohmann::json& j, WayDiscrepancy& r);
void to_json(nlohmann::json& j, const ReportRecord& r);
void from_json(const nlohmann::json& j, ReportRecord& r);

}  // namespace relweyl
