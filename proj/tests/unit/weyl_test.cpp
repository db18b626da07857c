#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "relweyl/weyl.hpp"

using namespace relweyl;
using testing_helpers::delta_coords;
using testing_helpers::L;
using testing_helpers::labels;

namespace {

std::vector<long long> negated(std::vector<long long> v) {
  for (auto& x : v) x = -x;
  return v;
}

std::vector<long long> image_coords(const std::vector<ActionEntry>& table, int label) {
  for (const auto& e : table)
    if (e.label.index == label) return e.simple_coords;
  throw std::out_of_range("label");
}

}  // namespace

TEST_CASE("simple reflections") {
  auto g2 = build_root_system(TypeLabel::G2);
  auto s = simple_reflection(g2, L(1));
  CHECK(s.apply(RationalVector::parse("2 -1 -1")) == RationalVector::parse("2 -1 -1"));
  CHECK(s.apply(RationalVector::parse("1 1 -2")) == RationalVector::parse("1 -2 1"));
  CHECK(s * s == WeylElement::identity(g2));
  CHECK(s.length() == 1);
  // <beta, alpha^vee> = -3, so omega_alpha(beta) = beta + 3 alpha.
  auto img = s.apply(g2->simple(L(2)).ambient);
  CHECK(g2->frame().coordinates(img) == std::vector<Rational>{Rational(3), Rational(1)});
  CHECK_THROWS(simple_reflection(g2, L(3)));
}

TEST_CASE("longest elements") {
  CHECK(longest_element(build_root_system(TypeLabel::G2)).length() == 6);
  CHECK(longest_element(build_root_system(TypeLabel::E8)).length() == 120);
  auto g2 = build_root_system(TypeLabel::G2);
  auto rank_one = sub_system(g2, labels({1}));
  CHECK(longest_element(rank_one) == simple_reflection(rank_one, L(1)));
  CHECK(relative_longest(rank_one, L(1)) == simple_reflection(rank_one, L(1)));
}

TEST_CASE("longest element is an involution; on E6 it induces the diagram automorphism") {
  for (auto t : exceptional_types()) {
    CAPTURE(to_string(t));
    auto sys = build_root_system(t);
    auto w = longest_element(sys);
    for (const auto& r : sys->positive_roots()) CHECK_FALSE(w.sends_positive(r.ambient));
    std::map<int, int> perm;
    for (const auto& tau : sys->delta()) {
      auto img = -w.apply(tau.ambient);
      for (const auto& sigma : sys->delta())
        if (sigma.ambient == img) perm[tau.label.index] = sigma.label.index;
    }
    REQUIRE(perm.size() == sys->rank());
    if (t == TypeLabel::E6) {
      CHECK(perm == std::map<int, int>{{3, 7}, {4, 6}, {5, 5}, {6, 4}, {7, 3}, {8, 8}});
    } else {
      // w0 acts as -1 on the span of Delta.
      for (auto [a, b] : perm) CHECK(a == b);
    }
    CHECK(w * w == WeylElement::identity(sys));
  }
}

TEST_CASE("relative longest elements") {
  auto f4 = build_root_system(TypeLabel::F4);
  CHECK(relative_longest(f4, L(1)).length() == 15);
  auto g2 = build_root_system(TypeLabel::G2);
  auto w = relative_longest(g2, L(1));
  CHECK(w.length() == 5);
  CHECK(reduced_word_star(w).letters.size() == 5);
  CHECK_THROWS(relative_longest(g2, L(4)));

  auto e6 = build_root_system(TypeLabel::E6);
  CHECK(image_coords(action_table(e6, L(8)), 8) == negated({0, 0, 1, 2, 3, 2, 1, 1}));
  auto e7 = build_root_system(TypeLabel::E7);
  CHECK(image_coords(action_table(e7, L(7)), 7) == negated({0, 1, 2, 3, 4, 3, 1, 2}));
  auto e8 = build_root_system(TypeLabel::E8);
  CHECK(image_coords(action_table(e8, L(8)), 8) == negated({1, 2, 3, 3, 3, 2, 1, 1}));
  CHECK(image_coords(action_table(e8, L(7)), 1) == std::vector<long long>{1, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("relative longest maps Delta minus removed into Delta and inverts exactly S") {
  for (auto t : exceptional_types()) {
    auto sys = build_root_system(t);
    for (auto a : sys->labels()) {
      CAPTURE(to_string(t));
      CAPTURE(a.index);
      auto w = relative_longest(sys, a);
      for (const auto& tau : sys->delta()) {
        if (tau.label == a) continue;
        auto img = w.apply(tau.ambient);
        CHECK(std::any_of(sys->delta().begin(), sys->delta().end(), [&](const SimpleRoot& d) { return d.ambient == img; }));
      }
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < sys->positive_roots().size(); ++i)
        if (sys->coeff(sys->positive_roots()[i], a) != 0) s.push_back(i);
      CHECK(inversion_set(w) == s);
    }
  }
}

TEST_CASE("inversion sets and reduced words of small elements") {
  auto f4 = build_root_system(TypeLabel::F4);
  auto id = WeylElement::identity(f4);
  CHECK(inversion_set(id).empty());
  CHECK(reduced_word_star(id).letters.empty());
  auto s2 = simple_reflection(f4, L(2));
  auto inv = inversion_set(s2);
  REQUIRE(inv.size() == 1);
  CHECK(f4->positive_roots()[inv[0]].ambient == f4->simple(L(2)).ambient);
}

TEST_CASE("inversion set follows the peeling formula of the greedy word") {
  auto sys = build_root_system(TypeLabel::F4);
  for (auto a : sys->labels()) {
    auto w = relative_longest(sys, a);
    auto word = reduced_word_star(w);
    CHECK(word_element(sys, word) == w);
    // Reading the word from the right: gamma_1, omega_{gamma_1}(gamma_2), ...
    std::set<std::size_t> formula;
    auto prefix = WeylElement::identity(sys);
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
      auto root = prefix.apply(sys->simple(*it).ambient);
      REQUIRE(sys->is_positive_root(root));
      formula.insert(*sys->root_index(root));
      prefix = prefix.times_reflection(*it);
    }
    auto inv = inversion_set(w);
    CHECK(formula == std::set<std::size_t>(inv.begin(), inv.end()));
  }
}

TEST_CASE("length, greedy word length and inversion count agree on random words") {
  std::mt19937 rng(20240613);
  for (auto t : exceptional_types()) {
    auto sys = build_root_system(t);
    auto ls = sys->labels();
    for (int trial = 0; trial < 40; ++trial) {
      ReducedWord word;
      int n = std::uniform_int_distribution<int>(0, 30)(rng);
      for (int i = 0; i < n; ++i) word.letters.push_back(ls[std::uniform_int_distribution<std::size_t>(0, ls.size() - 1)(rng)]);
      auto w = word_element(sys, word);
      auto star = reduced_word_star(w);
      CHECK(w.length() == star.letters.size());
      CHECK(w.length() == inversion_set(w).size());
      CHECK(word_element(sys, star) == w);
      CHECK(w.inverse() * w == WeylElement::identity(sys));
    }
  }
}

TEST_CASE("brute-force enumeration agrees with the engine") {
  auto g2 = build_root_system(TypeLabel::G2);
  CHECK(oracle::enumerate_weyl_group(*g2).size() == 12);
  CHECK(oracle::simple_action(*g2, longest_element(g2).matrix()) == oracle::brute_longest(*g2));
  for (auto a : g2->labels())
    CHECK(oracle::simple_action(*g2, relative_longest(g2, a).matrix()) == oracle::brute_relative_longest(*g2, a));

  auto f4 = build_root_system(TypeLabel::F4);
  CHECK(oracle::enumerate_weyl_group(*sub_system(f4, labels({1, 2, 3}))).size() == 48);
  auto e6 = build_root_system(TypeLabel::E6);
  CHECK(oracle::enumerate_weyl_group(*sub_system(e6, labels({3, 4, 5}))).size() == 24);
}

TEST_CASE("from_matrix rejects non-Weyl matrices") {
  auto g2 = build_root_system(TypeLabel::G2);
  Matrix m = Matrix::identity(3);
  m.at(0, 0) = Rational(2);
  CHECK_THROWS(WeylElement::from_matrix(g2, m));
  CHECK_NOTHROW(WeylElement::from_matrix(g2, longest_element(g2).matrix()));
}

TEST_CASE("lifting a sub-system element keeps its matrix") {
  auto e8 = build_root_system(TypeLabel::E8);
  auto sub = sub_system(e8, labels({1, 2, 3}));
  auto w = longest_element(sub);
  auto lifted = w.lifted(e8);
  CHECK(lifted.system() == e8);
  CHECK(lifted.matrix() == w.matrix());
  CHECK(lifted.length() == sub->positive_roots().size());
}
