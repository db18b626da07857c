#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relweyl/rational.hpp"

namespace relweyl {

enum class TypeLabel { G2, F4, E6, E7, E8, Sub };

std::string to_string(TypeLabel t);
// Throws std::invalid_argument("unknown type: ...") for anything but G2/F4/E6/E7/E8.
TypeLabel parse_type(std::string_view text);
const std::vector<TypeLabel>& exceptional_types();

struct SimpleRootLabel {
  int index = 0;
  friend auto operator<=>(const SimpleRootLabel&, const SimpleRootLabel&) = default;
};

std::string to_string(SimpleRootLabel l);
// Accepts "3", "a3", "alpha3", "alpha_3"; G2 also takes "alpha"/"a" -> 1 and "beta"/"b" -> 2.
SimpleRootLabel parse_label(std::string_view text);

struct SimpleRoot {
  SimpleRootLabel label;
  RationalVector ambient;
};

// Coordinates are taken over the system's frame: E8 simple roots for E6/E7/E8
// and their sub-systems, the system's own Delta for G2/F4.
struct Root {
  RationalVector ambient;
  std::vector<long long> simple_coords;
  bool positive = true;

  int height() const;
};

struct Frame {
  std::vector<SimpleRoot> roots;
  std::vector<Rational> gram_inverse;  // row-major, roots.size()^2

  std::size_t position(SimpleRootLabel l) const;  // throws if absent
  bool contains(SimpleRootLabel l) const;
  // Throws unless v lies in the span of the frame.
  std::vector<Rational> coordinates(const RationalVector& v) const;
  RationalVector combine(const std::vector<long long>& coords) const;
};

class RootSystem;
using SystemPtr = std::shared_ptr<const RootSystem>;

class RootSystem {
 public:
  TypeLabel type() const { return type_; }
  std::size_t ambient_dim() const { return frame_->roots.front().ambient.dim(); }
  std::size_t rank() const { return delta_.size(); }
  const std::vector<SimpleRoot>& delta() const { return delta_; }
  std::vector<SimpleRootLabel> labels() const;
  const std::vector<Root>& positive_roots() const { return positive_; }
  const SystemPtr& parent() const { return parent_; }
  const Frame& frame() const { return *frame_; }
  const std::shared_ptr<const Frame>& frame_ptr() const { return frame_; }

  bool has_label(SimpleRootLabel l) const;
  const SimpleRoot& simple(SimpleRootLabel l) const;  // throws if absent
  // 1..rank position of a label in delta.
  int canonical_index(SimpleRootLabel l) const;
  long long coeff(const Root& r, SimpleRootLabel l) const;

  // Index into positive_roots() of +-v, if v is a root of this system.
  std::optional<std::size_t> root_index(const RationalVector& v) const;
  bool is_root(const RationalVector& v) const { return root_index(v).has_value(); }
  // Sign of a root of this system (or of any ancestor) via a regular functional.
  bool is_positive_root(const RationalVector& v) const;
  const RationalVector& positivity_functional() const { return positivity_; }

  // Half the sum of the positive roots.
  RationalVector rho() const;

  // True when this system is `other` or a descendant of it.
  bool descends_from(const RootSystem& other) const;

  // Internal; use build_root_system / sub_system.
  struct Token {};
  RootSystem(Token, TypeLabel type, std::shared_ptr<const Frame> frame, std::vector<SimpleRoot> delta,
             std::vector<Root> positive, SystemPtr parent, RationalVector positivity);

 private:
  TypeLabel type_;
  std::shared_ptr<const Frame> frame_;
  std::vector<SimpleRoot> delta_;
  std::vector<Root> positive_;
  SystemPtr parent_;
  RationalVector positivity_;
  std::map<RationalVector, std::size_t> index_;
};

SystemPtr build_root_system(TypeLabel type);
SystemPtr sub_system(const SystemPtr& sys, const std::vector<SimpleRootLabel>& subset);
// Connected components of the Dynkin graph, each sorted, ordered by smallest label.
std::vector<std::vector<SimpleRootLabel>> irreducible_components(const RootSystem& sys);
Rational pairing(const RationalVector& x, const Root& beta);

}  // namespace relweyl
