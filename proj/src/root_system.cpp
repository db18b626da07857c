#include "relweyl/root_system.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace relweyl {

namespace {

RationalVector vec(std::initializer_list<long long> xs, long long den = 1) {
  std::vector<Rational> out;
  for (long long x : xs) out.emplace_back(x, den);
  return RationalVector(std::move(out));
}

std::vector<SimpleRoot> e8_simple_roots() {
  return {
      {{1}, vec({1, -1, 0, 0, 0, 0, 0, 0})},
      {{2}, vec({0, 1, -1, 0, 0, 0, 0, 0})},
      {{3}, vec({0, 0, 1, -1, 0, 0, 0, 0})},
      {{4}, vec({0, 0, 0, 1, -1, 0, 0, 0})},
      {{5}, vec({0, 0, 0, 0, 1, -1, 0, 0})},
      {{6}, vec({0, 0, 0, 0, 0, 1, 1, 0})},
      {{7}, vec({-1, -1, -1, -1, -1, -1, -1, -1}, 2)},
      {{8}, vec({0, 0, 0, 0, 0, 1, -1, 0})},
  };
}

std::vector<SimpleRoot> frame_roots(TypeLabel type) {
  switch (type) {
    case TypeLabel::G2:
      return {{{1}, vec({0, 1, -1})}, {{2}, vec({1, -2, 1})}};
    case TypeLabel::F4:
      return {
          {{1}, vec({0, 1, -1, 0})},
          {{2}, vec({0, 0, 1, -1})},
          {{3}, vec({0, 0, 0, 1})},
          {{4}, vec({1, -1, -1, -1}, 2)},
      };
    case TypeLabel::E6:
    case TypeLabel::E7:
    case TypeLabel::E8:
      return e8_simple_roots();
    case TypeLabel::Sub:
      break;
  }
  throw std::invalid_argument("no frame for sub-system type");
}

int first_label(TypeLabel type) {
  switch (type) {
    case TypeLabel::E6: return 3;
    case TypeLabel::E7: return 2;
    default: return 1;
  }
}

std::shared_ptr<const Frame> make_frame(std::vector<SimpleRoot> roots) {
  const std::size_t n = roots.size();
  // Gauss-Jordan on [G | I].
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = dot(roots[i].ambient, roots[j].ambient);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].sign() == 0) ++p;
    if (p == n) throw std::logic_error("frame roots are linearly dependent");
    std::swap(a[p], a[c]);
    Rational inv = Rational(1) / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].sign() == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  auto frame = std::make_shared<Frame>();
  frame->roots = std::move(roots);
  frame->gram_inverse.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) frame->gram_inverse.push_back(a[i][n + j]);
  }
  return frame;
}

std::vector<long long> integral_coords(const Frame& frame, const RationalVector& v) {
  auto c = frame.coordinates(v);
  std::vector<long long> out;
  out.reserve(c.size());
  for (const auto& x : c) out.push_back(x.to_int());
  return out;
}

bool all_nonnegative(const std::vector<long long>& c) {
  return std::all_of(c.begin(), c.end(), [](long long x) { return x >= 0; });
}

RationalVector half_sum(const std::vector<Root>& roots, std::size_t dim) {
  RationalVector s(dim);
  for (const auto& r : roots) s += r.ambient;
  return Rational(1, 2) * s;
}

// Positive roots by breadth-first closure of delta under simple reflections.
std::vector<Root> close_positive(const Frame& frame, const std::vector<SimpleRoot>& delta) {
  std::vector<Root> out;
  std::set<RationalVector> seen;
  std::deque<RationalVector> queue;
  for (const auto& s : delta) {
    seen.insert(s.ambient);
    queue.push_back(s.ambient);
  }
  while (!queue.empty()) {
    RationalVector g = std::move(queue.front());
    queue.pop_front();
    auto coords = integral_coords(frame, g);
    if (!all_nonnegative(coords)) throw std::logic_error("closure produced a mixed-sign root");
    out.push_back(Root{g, coords, true});
    for (const auto& s : delta) {
      RationalVector h = g - pairing(g, s.ambient) * s.ambient;
      if (!all_nonnegative(integral_coords(frame, h))) continue;
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.simple_coords < b.simple_coords;
  });
  return out;
}

SystemPtr build_uncached(TypeLabel type) {
  auto frame = make_frame(frame_roots(type));
  std::vector<SimpleRoot> delta;
  for (const auto& r : frame->roots) {
    if (r.label.index >= first_label(type)) delta.push_back(r);
  }
  auto positive = close_positive(*frame, delta);
  auto rho = half_sum(positive, delta.front().ambient.dim());
  return std::make_shared<const RootSystem>(RootSystem::Token{}, type, frame, std::move(delta),
                                            std::move(positive), nullptr, std::move(rho));
}

}  // namespace

std::string to_string(TypeLabel t) {
  switch (t) {
    case TypeLabel::G2: return "G2";
    case TypeLabel::F4: return "F4";
    case TypeLabel::E6: return "E6";
    case TypeLabel::E7: return "E7";
    case TypeLabel::E8: return "E8";
    case TypeLabel::Sub: return "Sub";
  }
  return "?";
}

TypeLabel parse_type(std::string_view text) {
  std::string up(text);
  for (auto& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (TypeLabel t : exceptional_types()) {
    if (to_string(t) == up) return t;
  }
  throw std::invalid_argument("unknown type: " + std::string(text));
}

const std::vector<TypeLabel>& exceptional_types() {
  static const std::vector<TypeLabel> types = {TypeLabel::G2, TypeLabel::F4, TypeLabel::E6,
                                               TypeLabel::E7, TypeLabel::E8};
  return types;
}

std::string to_string(SimpleRootLabel l) { return "a" + std::to_string(l.index); }

SimpleRootLabel parse_label(std::string_view text) {
  std::string s(text);
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "alpha" || s == "a") return {1};
  if (s == "beta" || s == "b") return {2};
  for (std::string_view prefix : {"alpha_", "alpha", "a"}) {
    if (s.rfind(prefix, 0) == 0) {
      s = s.substr(prefix.size());
      break;
    }
  }
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      s.size() > 3) {
    throw std::invalid_argument("bad simple root label: " + std::string(text));
  }
  return {std::stoi(s)};
}

int Root::height() const { return static_cast<int>(std::accumulate(simple_coords.begin(), simple_coords.end(), 0LL)); }

std::size_t Frame::position(SimpleRootLabel l) const {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].label == l) return i;
  }
  throw std::invalid_argument("label " + to_string(l) + " not in frame");
}

bool Frame::contains(SimpleRootLabel l) const {
  return std::any_of(roots.begin(), roots.end(), [&](const SimpleRoot& r) { return r.label == l; });
}

std::vector<Rational> Frame::coordinates(const RationalVector& v) const {
  const std::size_t n = roots.size();
  std::vector<Rational> d(n);
  for (std::size_t j = 0; j < n; ++j) d[j] = dot(roots[j].ambient, v);
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (gram_inverse[i * n + j].sign() != 0 && d[j].sign() != 0) c[i] += gram_inverse[i * n + j] * d[j];
    }
  }
  RationalVector back(v.dim());
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].sign() != 0) back += c[i] * roots[i].ambient;
  }
  if (!(back == v)) throw std::invalid_argument("vector outside the root span: " + v.str());
  return c;
}

RationalVector Frame::combine(const std::vector<long long>& coords) const {
  RationalVector out(roots.front().ambient.dim());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (coords[i] != 0) out += Rational(coords[i]) * roots[i].ambient;
  }
  return out;
}

RootSystem::RootSystem(Token, TypeLabel type, std::shared_ptr<const Frame> frame, std::vector<SimpleRoot> delta,
                       std::vector<Root> positive, SystemPtr parent, RationalVector positivity)
    : type_(type),
      frame_(std::move(frame)),
      delta_(std::move(delta)),
      positive_(std::move(positive)),
      parent_(std::move(parent)),
      positivity_(std::move(positivity)) {
  for (std::size_t i = 0; i < positive_.size(); ++i) index_.emplace(positive_[i].ambient, i);
}

std::vector<SimpleRootLabel> RootSystem::labels() const {
  std::vector<SimpleRootLabel> out;
  for (const auto& s : delta_) out.push_back(s.label);
  return out;
}

bool RootSystem::has_label(SimpleRootLabel l) const {
  return std::any_of(delta_.begin(), delta_.end(), [&](const SimpleRoot& s) { return s.label == l; });
}

const SimpleRoot& RootSystem::simple(SimpleRootLabel l) const {
  for (const auto& s : delta_) {
    if (s.label == l) return s;
  }
  throw std::invalid_argument("label " + to_string(l) + " not in delta");
}

int RootSystem::canonical_index(SimpleRootLabel l) const {
  for (std::size_t i = 0; i < delta_.size(); ++i) {
    if (delta_[i].label == l) return static_cast<int>(i) + 1;
  }
  throw std::invalid_argument("label " + to_string(l) + " not in delta");
}

long long RootSystem::coeff(const Root& r, SimpleRootLabel l) const { return r.simple_coords[frame_->position(l)]; }

std::optional<std::size_t> RootSystem::root_index(const RationalVector& v) const {
  if (auto it = index_.find(v); it != index_.end()) return it->second;
  if (auto it = index_.find(-v); it != index_.end()) return it->second;
  return std::nullopt;
}

bool RootSystem::is_positive_root(const RationalVector& v) const {
  int s = dot(positivity_, v).sign();
  if (s == 0) throw std::invalid_argument("not a root: " + v.str());
  return s > 0;
}

RationalVector RootSystem::rho() const { return half_sum(positive_, ambient_dim()); }

bool RootSystem::descends_from(const RootSystem& other) const {
  for (const RootSystem* s = this; s != nullptr; s = s->parent_.get()) {
    if (s == &other) return true;
  }
  return false;
}

SystemPtr build_root_system(TypeLabel type) {
  if (type == TypeLabel::Sub) throw std::invalid_argument("build_root_system needs an exceptional type");
  static std::array<std::once_flag, 5> once;
  static std::array<SystemPtr, 5> cache;
  auto i = static_cast<std::size_t>(type);
  std::call_once(once[i], [&] { cache[i] = build_uncached(type); });
  return cache[i];
}

SystemPtr sub_system(const SystemPtr& sys, const std::vector<SimpleRootLabel>& subset) {
  std::vector<SimpleRoot> delta;
  for (const auto& s : sys->delta()) {
    if (std::find(subset.begin(), subset.end(), s.label) != subset.end()) delta.push_back(s);
  }
  for (auto l : subset) {
    if (!sys->has_label(l)) throw std::invalid_argument("label " + to_string(l) + " not in delta");
  }
  if (delta.empty()) throw std::invalid_argument("empty sub-system");
  std::vector<std::size_t> outside;
  for (const auto& s : sys->delta()) {
    if (std::find(subset.begin(), subset.end(), s.label) == subset.end()) {
      outside.push_back(sys->frame().position(s.label));
    }
  }
  std::vector<Root> positive;
  for (const auto& r : sys->positive_roots()) {
    bool inside = std::all_of(outside.begin(), outside.end(), [&](std::size_t p) { return r.simple_coords[p] == 0; });
    if (inside) positive.push_back(r);
  }
  return std::make_shared<const RootSystem>(RootSystem::Token{}, TypeLabel::Sub, sys->frame_ptr(), std::move(delta),
                                            std::move(positive), sys, sys->positivity_functional());
}

std::vector<std::vector<SimpleRootLabel>> irreducible_components(const RootSystem& sys) {
  const auto& delta = sys.delta();
  const std::size_t n = delta.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<SimpleRootLabel>> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> stack{start};
    comp[start] = id;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      out[id].push_back(delta[i].label);
      for (std::size_t j = 0; j < n; ++j) {
        if (comp[j] < 0 && dot(delta[i].ambient, delta[j].ambient).sign() != 0) {
          comp[j] = id;
          stack.push_back(j);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

Rational pairing(const RationalVector& x, const Root& beta) { return pairing(x, beta.ambient); }

}  // namespace relweyl
