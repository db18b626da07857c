#include "relweyl/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace relweyl {

namespace {

std::vector<SimpleRootLabel> without(std::vector<SimpleRootLabel> labels, SimpleRootLabel l) {
  labels.erase(std::remove(labels.begin(), labels.end(), l), labels.end());
  return labels;
}

bool contains(const std::vector<SimpleRootLabel>& labels, SimpleRootLabel l) {
  return std::find(labels.begin(), labels.end(), l) != labels.end();
}

std::vector<SimpleRootLabel> component_of(const SystemPtr& sys, SimpleRootLabel cut, SimpleRootLabel tau) {
  for (auto& c : irreducible_components(*sub_system(sys, without(sys->labels(), cut)))) {
    if (contains(c, tau)) return c;
  }
  throw std::logic_error("root " + to_string(tau) + " lies in no component");
}

RootSet local_roots(const RootSystem& sys, const std::vector<SimpleRootLabel>& comp, SimpleRootLabel tau) {
  std::vector<std::size_t> outside;
  for (const auto& s : sys.frame().roots) {
    if (!contains(comp, s.label)) outside.push_back(sys.frame().position(s.label));
  }
  const std::size_t tp = sys.frame().position(tau);
  RootSet out;
  const auto& roots = sys.positive_roots();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const auto& c = roots[i].simple_coords;
    if (c[tp] == 0) continue;
    if (std::all_of(outside.begin(), outside.end(), [&](std::size_t p) { return c[p] == 0; })) out.push_back(i);
  }
  return out;
}

// Indices of w.gamma for gamma in set; every image must be a positive root.
std::optional<RootSet> push_forward(const RootSystem& sys, const WeylElement& w, const RootSet& set) {
  RootSet out;
  for (auto i : set) {
    auto image = w.apply(sys.positive_roots()[i].ambient);
    auto j = sys.root_index(image);
    if (!j || !(sys.positive_roots()[*j].ambient == image)) return std::nullopt;
    out.push_back(*j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<RationalVector> ambient_set(const RootSystem& sys, const std::vector<SimpleRootLabel>& labels) {
  std::set<RationalVector> out;
  for (auto l : labels) out.insert(sys.simple(l).ambient);
  return out;
}

std::set<RationalVector> image_set(const WeylElement& w, const std::set<RationalVector>& xs) {
  std::set<RationalVector> out;
  for (const auto& x : xs) out.insert(w.apply(x));
  return out;
}

std::string labels_str(const std::vector<SimpleRootLabel>& ls) {
  std::string out = "{";
  for (std::size_t i = 0; i < ls.size(); ++i) out += (i ? "," : "") + to_string(ls[i]);
  return out + "}";
}

}  // namespace

int way_count(const RootSystem& sys) { return sys.rank() == 1 ? 1 : static_cast<int>(sys.rank()) - 1; }

SimpleRootLabel way_beta(const RootSystem& sys, SimpleRootLabel removed, int way) {
  auto rest = without(sys.labels(), removed);
  if (way < 1 || way > static_cast<int>(rest.size())) {
    throw std::invalid_argument("way " + std::to_string(way) + " out of range 1.." + std::to_string(rest.size()));
  }
  return rest[way - 1];
}

DecompositionTrace run_algorithm(const SystemPtr& sys, SimpleRootLabel removed, int way) {
  if (!sys->has_label(removed)) throw std::invalid_argument("label " + to_string(removed) + " not in delta");
  DecompositionTrace trace{sys, removed, way, std::nullopt, relative_longest(sys, removed), {}, {}};

  if (sys->rank() == 1) {
    if (way != 1) throw std::invalid_argument("rank-one system admits only way 1");
    auto w = simple_reflection(sys, removed);
    auto local = local_roots(*sys, {removed}, removed);
    trace.steps.push_back(AlgorithmStep{1, {removed}, removed, std::nullopt, removed, w, reduced_word_star(w),
                                        trace.w0, local, local});
    trace.total_word = trace.steps.back().word;
    return trace;
  }

  trace.beta = way_beta(*sys, removed, way);
  std::vector<SimpleRootLabel> taus{removed, *trace.beta};
  auto prefix = WeylElement::identity(sys);  // w_{n-1} ... w_1
  const std::size_t guard = sys->positive_roots().size();

  for (int n = 1;; ++n) {
    const SimpleRootLabel tau_in = taus[n - 1];
    const SimpleRootLabel tau_cut = taus[n];
    auto remaining = trace.w0 * prefix.inverse();
    if (n > 1 && remaining.sends_positive(sys->simple(tau_in).ambient)) break;
    if (static_cast<std::size_t>(n) > guard) throw std::logic_error("algorithm exceeded |Phi+| steps");

    auto comp = component_of(sys, tau_cut, tau_in);
    auto csys = sub_system(sys, comp);
    auto local_w = relative_longest(csys, tau_in);
    auto w = local_w.lifted(sys);

    auto moved = image_set(w, ambient_set(*sys, without(comp, tau_in)));
    std::vector<SimpleRootLabel> produced;
    for (auto l : comp) {
      if (!moved.count(sys->simple(l).ambient)) produced.push_back(l);
    }
    if (produced.size() != 1) {
      throw std::logic_error("singleton condition failed at step " + std::to_string(n) + " of " + labels_str(comp));
    }

    auto local = local_roots(*sys, comp, tau_in);
    auto piece = push_forward(*sys, prefix.inverse(), local);
    if (!piece) throw std::logic_error("piece left the positive roots at step " + std::to_string(n));

    trace.steps.push_back(AlgorithmStep{n, comp, tau_in, tau_cut, produced.front(), w, reduced_word_star(local_w),
                                        remaining, std::move(local), std::move(*piece)});
    prefix = w * prefix;
    taus.push_back(produced.front());
  }

  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    trace.total_word.letters.insert(trace.total_word.letters.end(), it->word.letters.begin(), it->word.letters.end());
  }
  return trace;
}

RootSet s_set(const RootSystem& sys, SimpleRootLabel removed) {
  if (!sys.has_label(removed)) throw std::invalid_argument("label " + to_string(removed) + " not in delta");
  const std::size_t p = sys.frame().position(removed);
  RootSet out;
  for (std::size_t i = 0; i < sys.positive_roots().size(); ++i) {
    if (sys.positive_roots()[i].simple_coords[p] != 0) out.push_back(i);
  }
  return out;
}

std::vector<RootSet> s_ab_partition(const RootSystem& sys, SimpleRootLabel removed, SimpleRootLabel beta) {
  if (!sys.has_label(beta) || beta == removed) throw std::invalid_argument("beta must be a simple root other than removed");
  const std::size_t pa = sys.frame().position(removed);
  const std::size_t pb = sys.frame().position(beta);
  std::map<std::pair<long long, long long>, RootSet> classes;
  std::vector<std::pair<long long, long long>> order;
  for (auto i : s_set(sys, removed)) {
    long long a = sys.positive_roots()[i].simple_coords[pa];
    long long b = sys.positive_roots()[i].simple_coords[pb];
    long long g = std::gcd(a, b);
    std::pair<long long, long long> key{a / g, b / g};
    auto [it, fresh] = classes.try_emplace(key);
    if (fresh) order.push_back(key);
    it->second.push_back(i);
  }
  std::vector<RootSet> out;
  for (const auto& k : order) out.push_back(classes[k]);
  return out;
}

CheckReport verify_proposition(const DecompositionTrace& trace) {
  CheckReport report;
  const auto& sys = *trace.system;
  std::set<RootSet> from_algorithm;
  for (const auto& s : trace.steps) from_algorithm.insert(s.s_piece);
  std::set<RootSet> from_classes;
  if (trace.beta) {
    for (auto& p : s_ab_partition(sys, trace.removed, *trace.beta)) from_classes.insert(p);
  } else {
    from_classes.insert(s_set(sys, trace.removed));
  }
  for (const auto& p : from_algorithm) {
    if (!from_classes.count(p)) report.fail("piece " + describe_root_set(sys, p) + " is not an S_(a,b) class");
  }
  for (const auto& p : from_classes) {
    if (!from_algorithm.count(p)) report.fail("class " + describe_root_set(sys, p) + " is not an algorithm piece");
  }
  return report;
}

CheckReport verify_proposition(const SystemPtr& sys, SimpleRootLabel removed, int way) {
  return verify_proposition(run_algorithm(sys, removed, way));
}

CheckReport verify_properties(const DecompositionTrace& trace) {
  CheckReport report;
  const auto& sysp = trace.system;
  const auto& sys = *sysp;
  const auto S = s_set(sys, trace.removed);
  const std::string where = to_string(trace.removed) + " way " + std::to_string(trace.way);

  // Product and property (B) for w0.
  if (!(trace.w0 == relative_longest(sysp, trace.removed))) report.fail(where + ": w0 differs from relative_longest");
  auto product = WeylElement::identity(sysp);
  for (const auto& s : trace.steps) product = s.w_factor * product;
  if (!(product == trace.w0)) report.fail(where + ": factor product differs from w0");
  if (inversion_set(trace.w0) != S) report.fail(where + ": (B) R(w0) differs from S");
  auto all_simple = ambient_set(sys, sys.labels());
  auto rest_image = image_set(trace.w0, ambient_set(sys, without(sys.labels(), trace.removed)));
  if (!std::includes(all_simple.begin(), all_simple.end(), rest_image.begin(), rest_image.end())) {
    report.fail(where + ": (B) w0 does not map Delta - {removed} into Delta");
  }

  // Length additivity and word certificates.
  std::size_t total = 0;
  for (const auto& s : trace.steps) total += s.w_factor.length();
  if (total != trace.w0.length() || trace.total_word.letters.size() != total) {
    report.fail(where + ": lengths are not additive");
  }
  if (!(word_element(sysp, trace.total_word) == trace.w0)) report.fail(where + ": total word does not spell w0");

  // Pieces cover S disjointly.
  RootSet all;
  for (const auto& s : trace.steps) all.insert(all.end(), s.s_piece.begin(), s.s_piece.end());
  std::sort(all.begin(), all.end());
  if (all != S) report.fail(where + ": pieces do not partition S");

  auto prefix = WeylElement::identity(sysp);
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const auto& st = trace.steps[k];
    const std::string at = where + " step " + std::to_string(st.step_index);
    const auto comp = ambient_set(sys, st.ambient_delta);
    const auto tn = sys.simple(st.tau_in).ambient;

    // w_n is the relative longest element of its component: R(w_n) is the local set.
    if (inversion_set(st.w_factor) != st.local_set) report.fail(at + ": R(w_n) differs from the local set");
    if (st.word.letters.size() != st.w_factor.length() || !(word_element(sysp, st.word) == st.w_factor)) {
      report.fail(at + ": word is not a reduced certificate");
    }

    // Singleton: component - w_n(component - {tau_in}) == {tau_next}.
    auto moved = image_set(st.w_factor, ambient_set(sys, without(st.ambient_delta, st.tau_in)));
    std::set<RationalVector> left;
    std::set_difference(comp.begin(), comp.end(), moved.begin(), moved.end(), std::inserter(left, left.end()));
    if (left != std::set<RationalVector>{sys.simple(st.tau_next).ambient}) report.fail(at + ": singleton condition");

    // (A): w_n^{-1}(component - {tau_next}) == component - {tau_in}.
    auto back = image_set(st.w_factor.inverse(), ambient_set(sys, without(st.ambient_delta, st.tau_next)));
    if (back != ambient_set(sys, without(st.ambient_delta, st.tau_in))) report.fail(at + ": (A)");

    // (C): the step runs because w0^{(n-1)}.tau_n < 0, and then all of R(w_n) goes negative.
    auto expected_remaining = trace.w0 * prefix.inverse();
    if (!(expected_remaining == st.remaining_before)) report.fail(at + ": recorded w0^{(n-1)} is wrong");
    if (st.remaining_before.sends_positive(tn)) report.fail(at + ": (C) step ran with w0^{(n-1)}.tau_n > 0");
    for (auto i : st.local_set) {
      if (st.remaining_before.sends_positive(sys.positive_roots()[i].ambient)) {
        report.fail(at + ": (C) sign dichotomy broken");
        break;
      }
    }

    // (D): lengths drop by exactly l(w_n).
    auto after = st.remaining_before * st.w_factor.inverse();
    if (after.length() + st.w_factor.length() != st.remaining_before.length()) report.fail(at + ": (D)");

    // Push-forward formula.
    auto piece = push_forward(sys, prefix.inverse(), st.local_set);
    if (!piece || *piece != st.s_piece) report.fail(at + ": piece differs from the push-forward formula");
    prefix = st.w_factor * prefix;
  }

  // Terminal step: w0^{(N)} fixes the next tau and (C) holds in the positive branch.
  auto final_remaining = trace.w0 * prefix.inverse();
  if (!(final_remaining == WeylElement::identity(sysp))) report.fail(where + ": w0^{(N)} is not the identity");
  if (trace.steps.size() > 0 && trace.steps.back().tau_cut) {
    const auto& last = trace.steps.back();
    auto next_in = *last.tau_cut;
    if (!final_remaining.sends_positive(sys.simple(next_in).ambient)) report.fail(where + ": did not stop at a positive root");
    auto comp = component_of(sysp, last.tau_next, next_in);
    for (auto i : local_roots(sys, comp, next_in)) {
      if (!final_remaining.sends_positive(sys.positive_roots()[i].ambient)) {
        report.fail(where + ": (C) terminal sign dichotomy broken");
        break;
      }
    }
  }
  return report;
}

std::string describe_root_set(const RootSystem& sys, const RootSet& set) {
  std::string out = "{";
  for (std::size_t k = 0; k < set.size(); ++k) {
    const auto& c = sys.positive_roots()[set[k]].simple_coords;
    out += k ? " (" : "(";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
    out += ")";
  }
  return out + "}";
}

}  // namespace relweyl
