#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "oracles.hpp"
#include "relweyl/normalization.hpp"

using namespace relweyl;
using testing_helpers::L;
using testing_helpers::root_at;
using testing_helpers::root_pos;

namespace {

LinearTerm term(Rational a, Rational b) { return {a, b}; }
ZeroFactor zero(Rational phase, Rational shift) { return {phase, shift}; }

LinearTerm term_of(TypeLabel t, int removed, const std::vector<long long>& coords) {
  auto sys = build_root_system(t);
  return s_term(steinberg_datum(sys, L(removed)), root_at(*sys, coords));
}

}  // namespace

TEST_CASE("linear terms") {
  CHECK(term(1, Rational(1, 2)).is_positive_term());
  CHECK(term(-1, Rational(-1, 2)).is_positive_term());
  CHECK_FALSE(term(2, 0).is_positive_term());
  CHECK_FALSE(term(1, Rational(-3, 2)).is_positive_term());
  CHECK(term(1, Rational(1, 2)).str() == "s+1/2");
  CHECK(term(3, Rational(-1, 2)).str() == "3s-1/2");
  CHECK(term(1, Rational(-3, 2)).one_minus().str() == "5/2-s");
  CHECK(term(2, 0).str() == "2s");
}

TEST_CASE("a term splits into one zero per phase") {
  auto m = FactorMultiset::of_term(term(3, Rational(-1, 2)));
  CHECK(m.size() == 3);
  CHECK(m.count(zero(0, Rational(-1, 6))) == 1);
  CHECK(m.count(zero(Rational(1, 3), Rational(-1, 6))) == 1);
  CHECK(m.count(zero(Rational(2, 3), Rational(-1, 6))) == 1);
  // 1 - q^{3s - 1/2} has the same zeros as 1 - q^{-(3s - 1/2)}.
  CHECK(FactorMultiset::of_term(term(-3, Rational(1, 2))) == m);
  CHECK_THROWS(FactorMultiset::of_term(term(Rational(1, 2), 0)));
  CHECK_THROWS(FactorMultiset::of_term(term(0, 1)));
}

TEST_CASE("multiset arithmetic") {
  auto a = FactorMultiset::of_terms({term(1, Rational(1, 2)), term(1, Rational(1, 2)), term(2, 0)});
  auto b = FactorMultiset::of_terms({term(1, Rational(1, 2)), term(1, 3)});
  CHECK(a.intersect(b) == FactorMultiset::of_term(term(1, Rational(1, 2))));
  CHECK(a.clipped_minus(b).size() == 3);
  CHECK_THROWS_AS(a.checked_minus(b), std::domain_error);
  CHECK(gcd_of_discrepancies({a}) == a);
  CHECK(gcd_of_discrepancies({FactorMultiset::of_term(term(1, 1)), FactorMultiset::of_term(term(1, 2))}).empty());
  auto grouped = FactorMultiset::of_terms({term(3, Rational(1, 2)), term(2, 0)}).as_terms();
  CHECK(grouped.leftover.empty());
  CHECK(grouped.terms.size() == 2);
}

TEST_CASE("Steinberg data") {
  auto g2 = build_root_system(TypeLabel::G2);
  auto d = steinberg_datum(g2, L(1));
  CHECK(d.nu_r == RationalVector::parse("1/2 -1 1/2"));
  CHECK(d.nu_r == Rational(1, 2) * g2->simple(L(2)).ambient);
  CHECK(steinberg_datum(build_root_system(TypeLabel::F4), L(4)).nu_r == RationalVector::parse("0 5/2 3/2 1/2"));
  CHECK_THROWS_AS(steinberg_datum(build_root_system(TypeLabel::E6), L(4)), std::invalid_argument);
  CHECK_FALSE(has_steinberg_datum(TypeLabel::E6, L(3)));
  CHECK(has_steinberg_datum(TypeLabel::E8, L(1)));
}

TEST_CASE("s-terms of printed rows") {
  CHECK(term_of(TypeLabel::G2, 1, {2, 1}) == term(2, 0));
  CHECK(term_of(TypeLabel::G2, 1, {3, 2}) == term(1, Rational(1, 2)));
  CHECK(term_of(TypeLabel::G2, 1, {3, 2}).one_minus() == term(-1, Rational(1, 2)));
  CHECK(term_of(TypeLabel::G2, 1, {1, 0}) == term(1, Rational(-3, 2)));
  CHECK(term_of(TypeLabel::F4, 2, {1, 2, 3, 1}) == term(4, 0));
  CHECK(term_of(TypeLabel::E7, 4, {1, 2, 3, 4, 3, 1, 2}) == term(3, 1));
}

TEST_CASE("s-terms agree with the coefficient formula and the printed simple-basis exponent") {
  for (const auto& p : printed_exponents()) {
    auto sys = build_root_system(p.type);
    auto d = steinberg_datum(sys, p.removed);
    auto table = factor_table(d);
    CHECK(table.rows.size() == s_set(*sys, p.removed).size());
    for (const auto& row : table.rows) {
      const auto& beta = sys->positive_roots()[row.root];
      CAPTURE(beta.ambient.str());
      CHECK(row.s_term.slope == oracle::slope_oracle(*sys, p.removed, beta));
      Rational b(0);
      for (std::size_t j = 0; j < p.simple_basis.size(); ++j) {
        if (p.simple_basis[j] == Rational(0)) continue;
        b += p.simple_basis[j] * relweyl::pairing(sys->frame().roots[j].ambient, beta.ambient);
      }
      CHECK(row.s_term.intercept == b);
      CHECK(row.one_minus_s_term == row.s_term.one_minus());
    }
  }
}

TEST_CASE("reduced numerators") {
  auto g2 = build_root_system(TypeLabel::G2);
  auto da = steinberg_datum(g2, L(1));
  CHECK(reduced_numerator({}, da).empty());
  CHECK(reduced_numerator({root_pos(*g2, {1, 0})}, da) == FactorMultiset::of_term(term(1, Rational(-3, 2))));

  // Numerator {3s-1/2, 3s+1/2, s+1/2, 2s, s-1/2} against the matching 1-s terms:
  // the orbit at shift -1/6 and the phase-0 zero at -1/2 cancel.
  auto db = steinberg_datum(g2, L(2));
  auto n = reduced_numerator(s_set(*g2, L(2)), db);
  FactorMultiset want = FactorMultiset::of_terms({term(3, Rational(1, 2)), term(1, Rational(1, 2)), term(2, 0)});
  CHECK(n == want);
  auto trivial = n.positive_factors(ImaginaryBranch::Trivial);
  CHECK(trivial == std::vector<ZeroFactor>{zero(0, Rational(1, 6)), zero(0, Rational(1, 2))});
  auto twisted = n.positive_factors(ImaginaryBranch::NonTrivial);
  CHECK(twisted == std::vector<ZeroFactor>{zero(Rational(1, 3), Rational(1, 6)), zero(Rational(2, 3), Rational(1, 6))});
}

TEST_CASE("discrepancies are polynomial and ignore piece order") {
  for (auto t : {TypeLabel::G2, TypeLabel::F4, TypeLabel::E6, TypeLabel::E7}) {
    auto sys = build_root_system(t);
    for (auto a : sys->labels()) {
      if (!has_steinberg_datum(t, a)) continue;
      auto d = steinberg_datum(sys, a);
      for (int way = 1; way <= way_count(*sys); ++way) {
        CAPTURE(to_string(t));
        CAPTURE(a.index);
        CAPTURE(way);
        auto trace = run_algorithm(sys, a, way);
        FactorMultiset disc;
        REQUIRE_NOTHROW(disc = discrepancy(trace, d));
        std::reverse(trace.steps.begin(), trace.steps.end());
        CHECK(discrepancy(trace, d) == disc);
      }
    }
  }
}

TEST_CASE("holomorphy verdicts") {
  auto f4 = build_root_system(TypeLabel::F4);
  CHECK(check_main_theorem(f4, L(3), {3}, ImaginaryBranch::Trivial).verdict == Verdict::HolomorphicVerified);
  auto e6 = build_root_system(TypeLabel::E6);
  CHECK(check_main_theorem(e6, L(7), {1, 5}, ImaginaryBranch::Trivial).verdict == Verdict::HolomorphicVerified);

  auto g2 = build_root_system(TypeLabel::G2);
  CHECK(check_main_theorem(g2, L(1), {1}, ImaginaryBranch::NonTrivial).verdict == Verdict::HolomorphicVerified);
  CHECK(check_main_theorem(g2, L(1), {1}, ImaginaryBranch::Trivial).verdict ==
        Verdict::RequiresRepresentationTheory);

  auto e8 = build_root_system(TypeLabel::E8);
  auto r = check_main_theorem(e8, L(8), {1, 2, 3, 4, 5, 6, 7}, ImaginaryBranch::Trivial);
  CHECK(r.verdict == Verdict::Obstructed);
  REQUIRE_FALSE(r.offending.empty());
  for (const auto& f : r.offending) CHECK(f == zero(0, Rational(1, 2)));
  CHECK(r.trace_digests.size() == 7);

  auto again = check_main_theorem(f4, L(1), {1, 3}, ImaginaryBranch::Trivial);
  CHECK(again.verdict == Verdict::HolomorphicVerified);
  CHECK(again.trace_digests == check_main_theorem(f4, L(1), {1, 3}, ImaginaryBranch::Trivial).trace_digests);
}
