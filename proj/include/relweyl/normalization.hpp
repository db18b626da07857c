#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "relweyl/decomposition.hpp"
#include "relweyl/rational.hpp"
#include "relweyl/root_system.hpp"

namespace relweyl {

// a*s + b
struct LinearTerm {
  Rational slope;
  Rational intercept;

  // a and b nonzero with the same sign.
  bool is_positive_term() const;
  LinearTerm one_minus() const { return {-slope, Rational(1) - intercept}; }
  std::string str() const;
  friend auto operator<=>(const LinearTerm&, const LinearTerm&) = default;
};

// One linear factor of 1 - q^{-(a s + b)} viewed as a polynomial in X = q^{-s}:
// the zero X = exp(2 pi i phase) q^{shift}, phase in [0, 1). The term a s + b
// with integer a > 0 splits into phases k/a, k = 0..a-1, all with shift b/a.
struct ZeroFactor {
  Rational phase;
  Rational shift;
  std::string str() const;
  friend auto operator<=>(const ZeroFactor&, const ZeroFactor&) = default;
};

// nu_I o alpha^vee = 1, or not.
enum class ImaginaryBranch { Trivial, NonTrivial };
std::string to_string(ImaginaryBranch b);

class FactorMultiset {
 public:
  FactorMultiset() = default;
  // Zeros of 1 - q^{-t}. Throws unless the slope is a nonzero integer; a
  // negative slope is normalized by the unit q^{t}.
  static FactorMultiset of_term(const LinearTerm& t);
  static FactorMultiset of_terms(const std::vector<LinearTerm>& ts);

  const std::map<ZeroFactor, int>& factors() const { return counts_; }
  int count(const ZeroFactor& f) const;
  std::size_t size() const;
  bool empty() const { return counts_.empty(); }

  FactorMultiset& operator+=(const FactorMultiset& o);
  friend FactorMultiset operator+(FactorMultiset a, const FactorMultiset& b) { return a += b; }
  // Multiset difference clipped at zero.
  FactorMultiset clipped_minus(const FactorMultiset& o) const;
  // Multiset difference; throws std::domain_error naming the first negative factor.
  FactorMultiset checked_minus(const FactorMultiset& o) const;
  FactorMultiset intersect(const FactorMultiset& o) const;
  friend bool operator==(const FactorMultiset&, const FactorMultiset&) = default;

  // Factors whose zero is a real pole candidate on the given branch: shift > 0
  // and phase 0 (trivial) or phase != 0 (non-trivial, worst case over the twist).
  std::vector<ZeroFactor> positive_factors(ImaginaryBranch branch) const;

  // Regroups full phase orbits {k/n} at one shift into the term n s + n shift.
  // Factors left over (an orbit without phase 0) are returned separately.
  struct Terms {
    std::vector<LinearTerm> terms;
    std::vector<ZeroFactor> leftover;
  };
  Terms as_terms() const;
  std::vector<std::string> display() const;

 private:
  void add(const ZeroFactor& f, int k);
  std::map<ZeroFactor, int> counts_;
};

struct SteinbergDatum {
  SystemPtr system;
  SimpleRootLabel removed;
  RationalVector nu_r;         // real exponent, ambient coordinates
  RationalVector alpha_tilde;  // <alpha_tilde, tau^vee> = delta_{tau, removed}
};

struct PrintedExponent {
  TypeLabel type;
  SimpleRootLabel removed;
  RationalVector ambient;
  std::vector<Rational> simple_basis;  // over the frame
};

// Published Steinberg exponents, one per supported pair.
const std::vector<PrintedExponent>& printed_exponents();
bool has_steinberg_datum(TypeLabel type, SimpleRootLabel removed);

// Vector in span(Delta) with <x, tau^vee> = delta_{tau, removed}.
RationalVector fundamental_weight(const RootSystem& sys, SimpleRootLabel removed);
// <rho_N, removed^vee>^{-1} rho_N, rho_N the half-sum over S.
RationalVector alpha_tilde_from_rho(const RootSystem& sys, SimpleRootLabel removed);

// Throws std::invalid_argument for pairs without a published exponent and
// std::logic_error if the exponent disagrees with its simple-basis form or rho^M.
SteinbergDatum steinberg_datum(const SystemPtr& sys, SimpleRootLabel removed);

struct FactorRow {
  std::size_t root;  // index into positive_roots()
  LinearTerm s_term;
  LinearTerm one_minus_s_term;
};

struct FactorTable {
  SteinbergDatum datum;
  std::vector<FactorRow> rows;  // one per root of S, in positive_roots() order
};

LinearTerm s_term(const SteinbergDatum& datum, const Root& beta);
FactorTable factor_table(const SteinbergDatum& datum);
// Numerator zeros over `roots` minus those shared with the denominator.
FactorMultiset reduced_numerator(const RootSet& roots, const SteinbergDatum& datum);
// (sum over pieces of reduced numerators) - reduced numerator over S.
FactorMultiset discrepancy(const DecompositionTrace& trace, const SteinbergDatum& datum);
FactorMultiset gcd_of_discrepancies(const std::vector<FactorMultiset>& ds);

enum class Verdict { HolomorphicVerified, Obstructed, RequiresRepresentationTheory };
std::string to_string(Verdict v);

struct VerificationReport {
  TypeLabel type;
  SimpleRootLabel removed;
  std::vector<int> ways_used;
  ImaginaryBranch branch;
  Verdict verdict;
  FactorMultiset gcd;
  std::vector<ZeroFactor> offending;
  std::vector<FactorMultiset> per_way_discrepancies;
  std::vector<std::string> trace_digests;
};

VerificationReport check_main_theorem(const SystemPtr& sys, SimpleRootLabel removed, const std::vector<int>& ways,
                                      ImaginaryBranch branch);

// Stable 64-bit digest of a trace's labels, words and pieces, as hex.
std::string trace_digest(const DecompositionTrace& trace);

struct PublishedClaim {
  TypeLabel type;
  SimpleRootLabel removed;
  std::vector<int> ways;
  ImaginaryBranch branch;
  Verdict expected;
  std::vector<LinearTerm> expected_gcd_positive;  // for obstructions: exact positive part of the gcd
};

const std::vector<PublishedClaim>& published_claims();

}  // namespace relweyl
