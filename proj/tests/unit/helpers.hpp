#pragma once

#include <stdexcept>
#include <vector>

#include "relweyl/root_system.hpp"

namespace testing_helpers {

inline relweyl::SimpleRootLabel L(int i) { return relweyl::SimpleRootLabel{i}; }

inline std::vector<relweyl::SimpleRootLabel> labels(std::initializer_list<int> xs) {
  std::vector<relweyl::SimpleRootLabel> out;
  for (int x : xs) out.push_back(L(x));
  return out;
}

// Frame coordinates restricted to delta order.
inline std::vector<long long> delta_coords(const relweyl::RootSystem& sys, const relweyl::Root& r) {
  std::vector<long long> out;
  for (const auto& t : sys.delta()) out.push_back(r.simple_coords[sys.frame().position(t.label)]);
  return out;
}

// Positive root with the given coordinates over delta order.
inline const relweyl::Root& root_at(const relweyl::RootSystem& sys, const std::vector<long long>& coords) {
  for (const auto& r : sys.positive_roots()) {
    if (delta_coords(sys, r) == coords) return r;
  }
  throw std::out_of_range("no such root");
}

inline std::size_t root_pos(const relweyl::RootSystem& sys, const std::vector<long long>& coords) {
  return static_cast<std::size_t>(&root_at(sys, coords) - sys.positive_roots().data());
}

}  // namespace testing_helpers
