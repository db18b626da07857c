#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relweyl/root_system.hpp"
#include "relweyl/weyl.hpp"

namespace relweyl {

// Sorted indices into a system's positive_roots().
using RootSet = std::vector<std::size_t>;

// One triple (Delta_1, tau_in, tau_cut) of the iteration. The factor w_n is the
// relative longest element of (component, tau_in); it maps
// component - {tau_in} onto component - {tau_next}.
struct AlgorithmStep {
  int step_index = 0;
  std::vector<SimpleRootLabel> ambient_delta;  // component of Delta - {tau_cut} containing tau_in
  SimpleRootLabel tau_in;
  std::optional<SimpleRootLabel> tau_cut;  // empty only for rank one
  SimpleRootLabel tau_next;                // produced root
  WeylElement w_factor;                    // in the trace's system
  ReducedWord word;                        // reduced_word_star of w_factor
  WeylElement remaining_before;            // w0 (w_{n-1} ... w_1)^{-1}
  RootSet local_set;                       // R(w_n): roots on the component with c_{tau_in} != 0
  RootSet s_piece;                         // (w_{n-1} ... w_1)^{-1} . local_set
};

struct DecompositionTrace {
  SystemPtr system;
  SimpleRootLabel removed;
  int way = 1;
  std::optional<SimpleRootLabel> beta;
  WeylElement w0;
  std::vector<AlgorithmStep> steps;
  ReducedWord total_word;  // words of w_n ... w_1 concatenated in written order
};

// Number of admissible Ways: |Delta| - 1, or 1 for rank one.
int way_count(const RootSystem& sys);
// Way k uses the k-th label of Delta - {removed} in ascending order.
SimpleRootLabel way_beta(const RootSystem& sys, SimpleRootLabel removed, int way);

DecompositionTrace run_algorithm(const SystemPtr& sys, SimpleRootLabel removed, int way);

RootSet s_set(const RootSystem& sys, SimpleRootLabel removed);
// S grouped by the ray of (c_removed, c_beta); pieces ordered by first member.
std::vector<RootSet> s_ab_partition(const RootSystem& sys, SimpleRootLabel removed, SimpleRootLabel beta);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
  void merge(const CheckReport& o) {
    for (const auto& f : o.failures) fail(f);
  }
};

CheckReport verify_proposition(const SystemPtr& sys, SimpleRootLabel removed, int way);
CheckReport verify_proposition(const DecompositionTrace& trace);
// Properties (A)-(D) at every step plus the trace invariants (product,
// length additivity, disjoint cover of S, word certificates).
CheckReport verify_properties(const DecompositionTrace& trace);

std::string describe_root_set(const RootSystem& sys, const RootSet& set);

}  // namespace relweyl
