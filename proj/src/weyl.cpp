#include "relweyl/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace relweyl {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalVector Matrix::apply(const RationalVector& v) const {
  if (v.dim() != n_) throw std::invalid_argument("dimension mismatch");
  RationalVector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Rational s;
    for (std::size_t j = 0; j < n_; ++j) {
      const Rational& a = data_[i * n_ + j];
      if (a.sign() != 0 && v[j].sign() != 0) s += a * v[j];
    }
    out[i] = std::move(s);
  }
  return out;
}

RationalVector Matrix::apply_transpose(const RationalVector& v) const {
  if (v.dim() != n_) throw std::invalid_argument("dimension mismatch");
  RationalVector out(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    if (v[j].sign() == 0) continue;
    for (std::size_t i = 0; i < n_; ++i) {
      const Rational& a = data_[j * n_ + i];
      if (a.sign() != 0) out[i] += a * v[j];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch");
  const std::size_t n = a.n_;
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& x = a.at(i, k);
      if (x.sign() == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b.at(k, j).sign() != 0) c.at(i, j) += x * b.at(k, j);
      }
    }
  }
  return c;
}

WeylElement WeylElement::identity(SystemPtr sys) {
  auto n = sys->ambient_dim();
  return WeylElement(std::move(sys), Matrix::identity(n));
}

WeylElement WeylElement::from_matrix(SystemPtr sys, Matrix m) {
  if (m.dim() != sys->ambient_dim()) throw std::invalid_argument("matrix dimension mismatch");
  if (!(m.transpose() * m == Matrix::identity(m.dim()))) throw std::invalid_argument("matrix is not orthogonal");
  for (const auto& r : sys->positive_roots()) {
    if (!sys->is_root(m.apply(r.ambient))) throw std::invalid_argument("matrix does not permute the roots");
  }
  return WeylElement(std::move(sys), std::move(m));
}

bool WeylElement::sends_positive(const RationalVector& gamma) const {
  // h.(w gamma) = (w^T h).gamma
  int s = dot(matrix_.apply_transpose(system_->positivity_functional()), gamma).sign();
  if (s == 0) throw std::invalid_argument("not a root: " + gamma.str());
  return s > 0;
}

WeylElement WeylElement::inverse() const { return WeylElement(system_, matrix_.transpose()); }

WeylElement WeylElement::lifted(const SystemPtr& ancestor) const {
  if (!system_->descends_from(*ancestor)) throw std::invalid_argument("lift target is not an ancestor");
  return WeylElement(ancestor, matrix_);
}

WeylElement WeylElement::times_reflection(SimpleRootLabel tau) const {
  const auto& t = system_->simple(tau).ambient;
  // M s_t = M - (2/(t.t)) (M t) t^T
  RationalVector mt = matrix_.apply(t);
  Rational k = Rational(2) / dot(t, t);
  Matrix m = matrix_;
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (mt[i].sign() == 0) continue;
    Rational ki = k * mt[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (t[j].sign() != 0) m.at(i, j) -= ki * t[j];
    }
  }
  return WeylElement(system_, std::move(m));
}

std::size_t WeylElement::length() const { return inversion_set(*this).size(); }

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.system_ != b.system_) throw std::invalid_argument("composing elements of different systems");
  return WeylElement(a.system_, a.matrix_ * b.matrix_);
}

WeylElement simple_reflection(const SystemPtr& sys, SimpleRootLabel tau) {
  return WeylElement::identity(sys).times_reflection(tau);
}

WeylElement word_element(const SystemPtr& sys, const ReducedWord& word) {
  auto w = WeylElement::identity(sys);
  for (auto l : word.letters) w = w.times_reflection(l);
  return w;
}

WeylElement longest_element(const SystemPtr& sys) {
  auto w = WeylElement::identity(sys);
  for (;;) {
    RationalVector u = w.matrix().apply_transpose(sys->positivity_functional());
    const SimpleRoot* next = nullptr;
    for (const auto& s : sys->delta()) {
      if (dot(u, s.ambient).sign() > 0) {
        next = &s;
        break;
      }
    }
    if (next == nullptr) return w;
    w = w.times_reflection(next->label);
  }
}

WeylElement relative_longest(const SystemPtr& sys, SimpleRootLabel removed) {
  if (!sys->has_label(removed)) throw std::invalid_argument("label " + to_string(removed) + " not in delta");
  auto full = longest_element(sys);
  if (sys->rank() == 1) return full;
  std::vector<SimpleRootLabel> rest;
  for (auto l : sys->labels()) {
    if (l != removed) rest.push_back(l);
  }
  return full * longest_element(sub_system(sys, rest)).lifted(sys);
}

std::vector<std::size_t> inversion_set(const WeylElement& w) {
  const auto& sys = *w.system();
  RationalVector u = w.matrix().apply_transpose(sys.positivity_functional());
  std::vector<std::size_t> out;
  const auto& roots = sys.positive_roots();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (dot(u, roots[i].ambient).sign() < 0) out.push_back(i);
  }
  return out;
}

ReducedWord reduced_word_star(const WeylElement& w) {
  const auto& sys = w.system();
  std::vector<SimpleRootLabel> peeled;
  auto cur = w;
  for (;;) {
    RationalVector u = cur.matrix().apply_transpose(sys->positivity_functional());
    const SimpleRoot* next = nullptr;
    for (const auto& s : sys->delta()) {
      if (dot(u, s.ambient).sign() < 0) {
        next = &s;
        break;
      }
    }
    if (next == nullptr) break;
    peeled.push_back(next->label);
    cur = cur.times_reflection(next->label);
  }
  if (!(cur == WeylElement::identity(sys))) throw std::logic_error("greedy word did not reach the identity");
  std::reverse(peeled.begin(), peeled.end());
  return ReducedWord{std::move(peeled)};
}

std::vector<ActionEntry> action_table(const SystemPtr& sys, SimpleRootLabel removed) {
  auto inv = relative_longest(sys, removed).inverse();
  const auto& frame = sys->frame();
  std::vector<ActionEntry> out;
  for (const auto& f : frame.roots) {
    bool shown = sys->has_label(f.label);
    for (const auto& s : sys->delta()) shown = shown || dot(f.ambient, s.ambient).sign() != 0;
    if (!shown) continue;
    auto image = inv.apply(f.ambient);
    std::vector<long long> coords;
    for (const auto& c : frame.coordinates(image)) coords.push_back(c.to_int());
    out.push_back(ActionEntry{f.label, std::move(image), std::move(coords)});
  }
  return out;
}

}  // namespace relweyl
