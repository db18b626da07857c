#include "relweyl/json_io.hpp"

namespace relweyl {

using nlohmann::json;

RootSystemRecord record_of(const RootSystem& sys) {
  RootSystemRecord rec{to_string(sys.type()), {}, {}};
  for (const auto& s : sys.delta()) rec.delta.push_back({s.label.index, s.ambient});
  for (const auto& r : sys.positive_roots()) rec.positive_roots.push_back({r.ambient, r.simple_coords});
  return rec;
}

TraceRecord record_of(const DecompositionTrace& trace) {
  TraceRecord rec{to_string(trace.system->type()), trace.removed.index, trace.way, {}, trace.total_word.letters.size()};
  const auto& roots = trace.system->positive_roots();
  for (const auto& st : trace.steps) {
    StepRecord s;
    for (auto l : st.ambient_delta) s.delta.push_back(l.index);
    s.tau_in = st.tau_in.index;
    if (st.tau_cut) s.tau_cut = st.tau_cut->index;
    s.tau_next = st.tau_next.index;
    for (auto l : st.word.letters) s.word.push_back(l.index);
    for (auto i : st.s_piece) s.s_piece.push_back(roots[i].simple_coords);
    rec.steps.push_back(std::move(s));
  }
  return rec;
}

ReportRecord record_of(const VerificationReport& report) {
  ReportRecord rec{to_string(report.type), report.removed.index, report.ways_used, to_string(report.branch),
                   to_string(report.verdict), report.gcd.display(), {}, {}, report.trace_digests};
  for (const auto& f : report.offending) rec.offending.push_back(f.str());
  for (std::size_t i = 0; i < report.per_way_discrepancies.size(); ++i) {
    rec.per_way_discrepancies.push_back({report.ways_used[i], report.per_way_discrepancies[i].display()});
  }
  return rec;
}

void to_json(json& j, const Rational& r) { j = r.str(); }
void from_json(const json& j, Rational& r) { r = Rational::parse(j.get<std::string>()); }

void to_json(json& j, const RationalVector& v) {
  j = json::array();
  for (const auto& x : v) j.push_back(x.str());
}
void from_json(const json& j, RationalVector& v) {
  std::vector<Rational> xs;
  for (const auto& e : j) xs.push_back(e.get<Rational>());
  v = RationalVector(std::move(xs));
}

void to_json(json& j, const SimpleRootRecord& r) { j = json{{"label", r.label}, {"ambient", r.ambient}}; }
void from_json(const json& j, SimpleRootRecord& r) {
  r.label = j.at("label").get<int>();
  r.ambient = j.at("ambient").get<RationalVector>();
}

void to_json(json& j, const RootRecord& r) { j = json{{"ambient", r.ambient}, {"simple_coords", r.simple_coords}}; }
void from_json(const json& j, RootRecord& r) {
  r.ambient = j.at("ambient").get<RationalVector>();
  r.simple_coords = j.at("simple_coords").get<std::vector<long long>>();
}

void to_json(json& j, const RootSystemRecord& r) {
  j = json{{"type", r.type}, {"delta", r.delta}, {"positive_roots", r.positive_roots}};
}
void from_json(const json& j, RootSystemRecord& r) {
  r.type = j.at("type").get<std::string>();
  r.delta = j.at("delta").get<std::vector<SimpleRootRecord>>();
  r.positive_roots = j.at("positive_roots").get<std::vector<RootRecord>>();
}

void to_json(json& j, const StepRecord& r) {
  j = json{{"delta", r.delta}, {"tau_in", r.tau_in},         {"tau_next", r.tau_next},
           {"word", r.word},   {"s_piece", r.s_piece}};
  j["tau_cut"] = r.tau_cut ? json(*r.tau_cut) : json(nullptr);
}
void from_json(const json& j, StepRecord& r) {
  r.delta = j.at("delta").get<std::vector<int>>();
  r.tau_in = j.at("tau_in").get<int>();
  r.tau_cut = j.at("tau_cut").is_null() ? std::nullopt : std::optional<int>(j.at("tau_cut").get<int>());
  r.tau_next = j.at("tau_next").get<int>();
  r.word = j.at("word").get<std::vector<int>>();
  r.s_piece = j.at("s_piece").get<std::vector<std::vector<long long>>>();
}

void to_json(json& j, const TraceRecord& r) {
  j = json{{"type", r.type},   {"removed", r.removed},           {"way", r.way},
           {"steps", r.steps}, {"total_length", r.total_length}};
}
void from_json(const json& j, TraceRecord& r) {
  r.type = j.at("type").get<std::string>();
  r.removed = j.at("removed").get<int>();
  r.way = j.at("way").get<int>();
  r.steps = j.at("steps").get<std::vector<StepRecord>>();
  r.total_length = j.at("total_length").get<std::size_t>();
}

void to_json(json& j, const WayDiscrepancy& r) { j = json{{"way", r.way}, {"terms", r.terms}}; }
void from_json(const json& j, WayDiscrepancy& r) {
  r.way = j.at("way").get<int>();
  r.terms = j.at("terms").get<std::vector<std::string>>();
}

void to_json(json& j, const ReportRecord& r) {
  j = json{{"type", r.type},
           {"removed", r.removed},
           {"ways", r.ways},
           {"branch", r.branch},
           {"verdict", r.verdict},
           {"gcd_terms", r.gcd_terms},
           {"offending", r.offending},
           {"per_way_discrepancies", r.per_way_discrepancies},
           {"trace_digests", r.trace_digests}};
}
void from_json(const json& j, ReportRecord& r) {
  r.type = j.at("type").get<std::string>();
  r.removed = j.at("removed").get<int>();
  r.ways = j.at("ways").get<std::vector<int>>();
  r.branch = j.at("branch").get<std::string>();
  r.verdict = j.at("verdict").get<std::string>();
  r.gcd_terms = j.at("gcd_terms").get<std::vector<std::string>>();
  r.offending = j.at("offending").get<std::vector<std::string>>();
  r.per_way_discrepancies = j.at("per_way_discrepancies").get<std::vector<WayDiscrepancy>>();
  r.trace_digests = j.at("trace_digests").get<std::vector<std::string>>();
}

}  // namespace relweyl
