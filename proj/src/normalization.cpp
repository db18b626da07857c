#include "relweyl/normalization.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <stdexcept>

namespace relweyl {

namespace {

std::string coefficient_s(const Rational& a) {
  if (a == Rational(1)) return "s";
  if (a == Rational(-1)) return "-s";
  return a.str() + "s";
}

std::vector<SimpleRootLabel> without(std::vector<SimpleRootLabel> labels, SimpleRootLabel l) {
  labels.erase(std::remove(labels.begin(), labels.end(), l), labels.end());
  return labels;
}

// Solves m y = rhs over the rationals; m square and invertible.
std::vector<Rational> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].sign() == 0) ++p;
    if (p == n) throw std::logic_error("singular system");
    std::swap(m[p], m[c]);
    std::swap(rhs[p], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].sign() == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

RationalVector combine(const Frame& frame, const std::vector<Rational>& coords) {
  RationalVector out(frame.roots.front().ambient.dim());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].sign() != 0) out += coords[i] * frame.roots[i].ambient;
  }
  return out;
}

struct PrintedRow {
  TypeLabel type;
  int removed;
  const char* ambient;
  const char* simple_basis;
};

constexpr PrintedRow kPrinted[] = {
    {TypeLabel::G2, 1, "1/2 -1 1/2", "0 1/2"},
    {TypeLabel::G2, 2, "0 1/2 -1/2", "1/2 0"},
    {TypeLabel::F4, 1, "3/2 -3/2 3/2 1/2", "0 3 5 3"},
    {TypeLabel::F4, 2, "1/2 0 -1 1/2", "1/2 0 1 1"},
    {TypeLabel::F4, 3, "1/4 3/4 -1/4 -5/4", "1 1 0 1/2"},
    {TypeLabel::F4, 4, "0 5/2 3/2 1/2", "5/2 4 9/2 0"},
    {TypeLabel::E6, 5, "-1/2 -1/2 1/2 -1/2 -3/2 1 0 -1/2", "0 0 1 1 0 1 1 1/2"},
    {TypeLabel::E6, 6, "-1/4 -1/4 7/4 3/4 -1/4 -5/4 -9/4 -1/4", "0 0 2 3 3 0 1/2 2"},
    {TypeLabel::E6, 7, "0 0 4 3 2 1 0 0", "0 0 4 7 9 5 0 5"},
    {TypeLabel::E6, 8, "-5/4 -5/4 5/4 1/4 -3/4 -7/4 11/4 -5/4", "0 0 5/2 4 9/2 4 5/2 0"},
    {TypeLabel::E7, 2, "-4 -4 4 3 2 1 0 -4", "0 0 8 15 21 15 8 11"},
    {TypeLabel::E7, 3, "-2 -3/2 -5/2 3 2 1 0 -2", "0 1/2 0 5 9 7 4 5"},
    {TypeLabel::E7, 4, "-1 0 -1 -2 2 1 0 -1", "0 1 1 0 3 3 2 2"},
    {TypeLabel::E7, 5, "-1/2 1 0 -1 -2 1 0 -1/2", "0 3/2 2 3/2 0 1 1 1/2"},
    {TypeLabel::E7, 6, "-1/4 9/4 5/4 1/4 -3/4 -7/4 -11/4 -1/4", "0 5/2 4 9/2 4 0 1/2 5/2"},
    {TypeLabel::E7, 7, "0 5 4 3 2 1 0 0", "0 5 9 12 14 15/2 0 15/2"},
    {TypeLabel::E7, 8, "-3/2 3/2 1/2 -1/2 -3/2 -5/2 7/2 -3/2", "0 3 5 6 6 5 3 0"},
    {TypeLabel::E8, 1, "-17/2 5 4 3 2 1 0 -17/2", "0 27/2 26 75/2 48 33 17 49/2"},
    {TypeLabel::E8, 2, "-7/2 -9/2 4 3 2 1 0 -4", "1/2 0 8 15 21 15 8 11"},
    {TypeLabel::E8, 3, "-1 -2 -3 3 2 1 0 -2", "1 1 0 5 9 7 4 5"},
    {TypeLabel::E8, 4, "1/2 -1/2 -3/2 -5/2 2 1 0 -1", "3/2 2 3/2 0 3 3 2 2"},
    {TypeLabel::E8, 5, "3/2 1/2 -1/2 -3/2 -5/2 1 0 -1/2", "2 3 3 2 0 1 1 1/2"},
    {TypeLabel::E8, 6, "11/4 7/4 3/4 -1/4 -5/4 -9/4 -13/4 -1/4", "3 5 6 6 5 0 1/2 3"},
    {TypeLabel::E8, 7, "6 5 4 3 2 1 0 0", "6 11 15 18 20 21/2 0 21/2"},
    {TypeLabel::E8, 8, "7/4 3/4 -1/4 -5/4 -9/4 -13/4 17/4 -7/4", "7/2 6 15/2 8 15/2 6 7/2 0"},
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

bool LinearTerm::is_positive_term() const {
  int a = slope.sign();
  int b = intercept.sign();
  return a != 0 && a == b;
}

std::string LinearTerm::str() const {
  if (slope.sign() == 0) return intercept.str();
  if (slope.sign() > 0) {
    std::string out = coefficient_s(slope);
    if (intercept.sign() > 0) out += "+" + intercept.str();
    if (intercept.sign() < 0) out += intercept.str();
    return out;
  }
  if (intercept.sign() == 0) return coefficient_s(slope);
  return intercept.str() + coefficient_s(slope);
}

std::string ZeroFactor::str() const {
  LinearTerm t{1, shift};
  if (phase.sign() == 0) return t.str();
  return "[" + t.str() + "]@" + phase.str();
}

std::string to_string(ImaginaryBranch b) { return b == ImaginaryBranch::Trivial ? "trivial" : "nontrivial"; }

FactorMultiset FactorMultiset::of_term(const LinearTerm& t) {
  Rational a = t.slope;
  Rational b = t.intercept;
  if (a.sign() < 0) {
    a = -a;
    b = -b;
  }
  if (a.sign() == 0 || !a.is_integer()) throw std::invalid_argument("factor slope must be a nonzero integer: " + t.str());
  long long n = a.to_int();
  FactorMultiset out;
  Rational shift = b / a;
  for (long long k = 0; k < n; ++k) out.add(ZeroFactor{Rational(k, n), shift}, 1);
  return out;
}

FactorMultiset FactorMultiset::of_terms(const std::vector<LinearTerm>& ts) {
  FactorMultiset out;
  for (const auto& t : ts) out += of_term(t);
  return out;
}

void FactorMultiset::add(const ZeroFactor& f, int k) {
  int& c = counts_[f];
  c += k;
  if (c == 0) counts_.erase(f);
}

int FactorMultiset::count(const ZeroFactor& f) const {
  auto it = counts_.find(f);
  return it == counts_.end() ? 0 : it->second;
}

std::size_t FactorMultiset::size() const {
  std::size_t n = 0;
  for (const auto& [f, c] : counts_) n += static_cast<std::size_t>(c);
  return n;
}

FactorMultiset& FactorMultiset::operator+=(const FactorMultiset& o) {
  for (const auto& [f, c] : o.counts_) add(f, c);
  return *this;
}

FactorMultiset FactorMultiset::clipped_minus(const FactorMultiset& o) const {
  FactorMultiset out;
  for (const auto& [f, c] : counts_) {
    int k = c - o.count(f);
    if (k > 0) out.add(f, k);
  }
  return out;
}

FactorMultiset FactorMultiset::checked_minus(const FactorMultiset& o) const {
  for (const auto& [f, c] : o.counts_) {
    if (count(f) < c) throw std::domain_error("negative multiplicity for factor " + f.str());
  }
  return clipped_minus(o);
}

FactorMultiset FactorMultiset::intersect(const FactorMultiset& o) const {
  FactorMultiset out;
  for (const auto& [f, c] : counts_) {
    int k = std::min(c, o.count(f));
    if (k > 0) out.add(f, k);
  }
  return out;
}

std::vector<ZeroFactor> FactorMultiset::positive_factors(ImaginaryBranch branch) const {
  std::vector<ZeroFactor> out;
  for (const auto& [f, c] : counts_) {
    bool twisted = f.phase.sign() != 0;
    if (f.shift.sign() > 0 && twisted == (branch == ImaginaryBranch::NonTrivial)) {
      for (int k = 0; k < c; ++k) out.push_back(f);
    }
  }
  return out;
}

FactorMultiset::Terms FactorMultiset::as_terms() const {
  std::map<Rational, std::map<Rational, int>> by_shift;
  for (const auto& [f, c] : counts_) by_shift[f.shift][f.phase] += c;
  Terms out;
  for (auto& [shift, phases] : by_shift) {
    for (;;) {
      if (!phases.count(Rational(0))) break;
      // Largest n with every k/n present; a full orbit contains 1/n, so n <= max denominator.
      long long best = 1;
      long long bound = 0;
      for (const auto& [p, c] : phases) bound = std::max(bound, p.denominator().convert_to<long long>());
      for (long long n = 2; n <= bound; ++n) {
        bool full = true;
        for (long long k = 0; k < n && full; ++k) full = phases.count(Rational(k, n)) > 0;
        if (full) best = n;
      }
      for (long long k = 0; k < best; ++k) {
        auto it = phases.find(Rational(k, best));
        if (--it->second == 0) phases.erase(it);
      }
      out.terms.push_back(LinearTerm{Rational(best), Rational(best) * shift});
    }
    for (const auto& [p, c] : phases) {
      for (int k = 0; k < c; ++k) out.leftover.push_back(ZeroFactor{p, shift});
    }
  }
  std::sort(out.terms.begin(), out.terms.end());
  return out;
}

std::vector<std::string> FactorMultiset::display() const {
  auto t = as_terms();
  std::vector<std::string> out;
  for (const auto& x : t.terms) out.push_back(x.str());
  for (const auto& f : t.leftover) out.push_back(f.str());
  return out;
}

const std::vector<PrintedExponent>& printed_exponents() {
  static const std::vector<PrintedExponent> rows = [] {
    std::vector<PrintedExponent> out;
    for (const auto& r : kPrinted) {
      out.push_back(PrintedExponent{r.type, SimpleRootLabel{r.removed}, RationalVector::parse(r.ambient),
                                    RationalVector::parse(r.simple_basis).coords()});
    }
    return out;
  }();
  return rows;
}

bool has_steinberg_datum(TypeLabel type, SimpleRootLabel removed) {
  const auto& rows = printed_exponents();
  return std::any_of(rows.begin(), rows.end(), [&](const PrintedExponent& p) { return p.type == type && p.removed == removed; });
}

RationalVector fundamental_weight(const RootSystem& sys, SimpleRootLabel removed) {
  const auto& delta = sys.delta();
  const std::size_t n = delta.size();
  // x = sum_j y_j tau_j with <x, tau_i^vee> = delta_{i, removed}.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  std::vector<Rational> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = pairing(delta[j].ambient, delta[i].ambient);
    rhs[i] = delta[i].label == removed ? 1 : 0;
  }
  auto y = solve(std::move(m), std::move(rhs));
  RationalVector x(sys.ambient_dim());
  for (std::size_t j = 0; j < n; ++j) x += y[j] * delta[j].ambient;
  return x;
}

RationalVector alpha_tilde_from_rho(const RootSystem& sys, SimpleRootLabel removed) {
  RationalVector rho_n(sys.ambient_dim());
  for (auto i : s_set(sys, removed)) rho_n += sys.positive_roots()[i].ambient;
  rho_n *= Rational(1, 2);
  return (Rational(1) / pairing(rho_n, sys.simple(removed).ambient)) * rho_n;
}

SteinbergDatum steinberg_datum(const SystemPtr& sys, SimpleRootLabel removed) {
  const PrintedExponent* printed = nullptr;
  for (const auto& p : printed_exponents()) {
    if (p.type == sys->type() && p.removed == removed) printed = &p;
  }
  if (printed == nullptr) {
    throw std::invalid_argument("no published exponent for " + to_string(sys->type()) + " " + to_string(removed));
  }
  if (!(combine(sys->frame(), printed->simple_basis) == printed->ambient)) {
    throw std::logic_error("published exponent disagrees with its simple-basis form");
  }
  auto rho_m = sub_system(sys, without(sys->labels(), removed))->rho();
  if (!(rho_m == printed->ambient)) throw std::logic_error("published exponent differs from rho^M");
  auto alpha_tilde = fundamental_weight(*sys, removed);
  if (!(alpha_tilde == alpha_tilde_from_rho(*sys, removed))) throw std::logic_error("alpha_tilde routes disagree");
  return SteinbergDatum{sys, removed, printed->ambient, alpha_tilde};
}

LinearTerm s_term(const SteinbergDatum& datum, const Root& beta) {
  return LinearTerm{pairing(datum.alpha_tilde, beta.ambient), pairing(datum.nu_r, beta.ambient)};
}

FactorTable factor_table(const SteinbergDatum& datum) {
  FactorTable table{datum, {}};
  const auto& roots = datum.system->positive_roots();
  for (auto i : s_set(*datum.system, datum.removed)) {
    auto t = s_term(datum, roots[i]);
    table.rows.push_back(FactorRow{i, t, t.one_minus()});
  }
  return table;
}

FactorMultiset reduced_numerator(const RootSet& roots, const SteinbergDatum& datum) {
  FactorMultiset num;
  FactorMultiset den;
  const auto& all = datum.system->positive_roots();
  for (auto i : roots) {
    auto t = s_term(datum, all[i]);
    if (t.slope.sign() == 0) throw std::invalid_argument("root outside S in reduced_numerator");
    num += FactorMultiset::of_term(t);
    den += FactorMultiset::of_term(t.one_minus());
  }
  return num.clipped_minus(num.intersect(den));
}

FactorMultiset discrepancy(const DecompositionTrace& trace, const SteinbergDatum& datum) {
  if (trace.system != datum.system || trace.removed != datum.removed) {
    throw std::invalid_argument("trace and datum describe different pairs");
  }
  FactorMultiset pieces;
  for (const auto& st : trace.steps) pieces += reduced_numerator(st.s_piece, datum);
  return pieces.checked_minus(reduced_numerator(s_set(*trace.system, trace.removed), datum));
}

FactorMultiset gcd_of_discrepancies(const std::vector<FactorMultiset>& ds) {
  if (ds.empty()) throw std::invalid_argument("gcd of an empty list");
  FactorMultiset g = ds.front();
  for (std::size_t i = 1; i < ds.size(); ++i) g = g.intersect(ds[i]);
  return g;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::HolomorphicVerified: return "HOLOMORPHIC_VERIFIED";
    case Verdict::Obstructed: return "OBSTRUCTED";
    case Verdict::RequiresRepresentationTheory: return "REQUIRES_REPRESENTATION_THEORY";
  }
  return "?";
}

VerificationReport check_main_theorem(const SystemPtr& sys, SimpleRootLabel removed, const std::vector<int>& ways,
                                      ImaginaryBranch branch) {
  if (ways.empty()) throw std::invalid_argument("at least one way is required");
  auto datum = steinberg_datum(sys, removed);
  VerificationReport report{sys->type(), removed, ways, branch, Verdict::HolomorphicVerified, {}, {}, {}, {}};
  for (int w : ways) {
    auto trace = run_algorithm(sys, removed, w);
    report.per_way_discrepancies.push_back(discrepancy(trace, datum));
    report.trace_digests.push_back(trace_digest(trace));
  }
  report.gcd = gcd_of_discrepancies(report.per_way_discrepancies);
  report.offending = report.gcd.positive_factors(branch);
  if (!report.offending.empty()) {
    // The G2 {alpha} trivial-twist case is settled by module theory, not by the gcd.
    bool needs_rep_theory =
        sys->type() == TypeLabel::G2 && removed == SimpleRootLabel{1} && branch == ImaginaryBranch::Trivial;
    report.verdict = needs_rep_theory ? Verdict::RequiresRepresentationTheory : Verdict::Obstructed;
  }
  return report;
}

std::string trace_digest(const DecompositionTrace& trace) {
  std::string canon = to_string(trace.system->type()) + ":" + to_string(trace.removed) + ":" + std::to_string(trace.way);
  const auto& roots = trace.system->positive_roots();
  for (const auto& st : trace.steps) {
    canon += "|" + to_string(st.tau_in) + ">" + to_string(st.tau_next) + ":";
    for (auto l : st.word.letters) canon += std::to_string(l.index) + ".";
    for (auto i : st.s_piece) {
      canon += "(";
      for (auto c : roots[i].simple_coords) canon += std::to_string(c) + ",";
      canon += ")";
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(canon)));
  return buf;
}

const std::vector<PublishedClaim>& published_claims() {
  using B = ImaginaryBranch;
  using V = Verdict;
  static const std::vector<PublishedClaim> claims = [] {
    std::vector<PublishedClaim> out;
    auto verified = [&](TypeLabel t, int removed, std::vector<int> ways) {
      for (B b : {B::Trivial, B::NonTrivial}) out.push_back({t, {removed}, ways, b, V::HolomorphicVerified, {}});
    };
    out.push_back({TypeLabel::G2, {1}, {1}, B::NonTrivial, V::HolomorphicVerified, {}});
    out.push_back({TypeLabel::G2, {1}, {1}, B::Trivial, V::RequiresRepresentationTheory, {{1, Rational(1, 2)}}});
    verified(TypeLabel::G2, 2, {1});
    verified(TypeLabel::F4, 1, {1, 3});
    verified(TypeLabel::F4, 2, {1});
    verified(TypeLabel::F4, 3, {3});
    verified(TypeLabel::F4, 4, {1});
    verified(TypeLabel::E6, 8, {1});
    verified(TypeLabel::E6, 8, {5});
    verified(TypeLabel::E6, 7, {1, 5});
    verified(TypeLabel::E6, 6, {4});
    verified(TypeLabel::E6, 5, {1});
    verified(TypeLabel::E7, 8, {1, 4});
    verified(TypeLabel::E7, 7, {1});
    verified(TypeLabel::E7, 6, {5});
    verified(TypeLabel::E7, 5, {1});
    verified(TypeLabel::E7, 4, {1});
    verified(TypeLabel::E7, 3, {1});
    verified(TypeLabel::E7, 2, {1, 5});
    verified(TypeLabel::E8, 1, {1, 6});
    verified(TypeLabel::E8, 2, {1});
    verified(TypeLabel::E8, 3, {1});
    verified(TypeLabel::E8, 4, {1, 7});
    verified(TypeLabel::E8, 5, {7});
    verified(TypeLabel::E8, 6, {6});
    verified(TypeLabel::E8, 7, {1, 6});
    out.push_back({TypeLabel::E8, {8}, {1, 2}, B::NonTrivial, V::HolomorphicVerified, {}});
    out.push_back({TypeLabel::E8, {8}, {1, 2, 3, 4, 5, 6, 7}, B::Trivial, V::Obstructed, {{1, Rational(1, 2)}}});
    return out;
  }();
  return claims;
}

}  // namespace relweyl
