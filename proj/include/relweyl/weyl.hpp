#pragma once

#include <cstddef>
#include <vector>

#include "relweyl/rational.hpp"
#include "relweyl/root_system.hpp"

namespace relweyl {

// Square rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}
  static Matrix identity(std::size_t n);

  std::size_t dim() const { return n_; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  RationalVector apply(const RationalVector& v) const;
  RationalVector apply_transpose(const RationalVector& v) const;
  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

// Element of W(sys) acting on the ambient space. Matrices are orthogonal, so
// the inverse is the transpose.
class WeylElement {
 public:
  static WeylElement identity(SystemPtr sys);
  // Throws unless m is orthogonal and permutes the roots of sys.
  static WeylElement from_matrix(SystemPtr sys, Matrix m);

  const SystemPtr& system() const { return system_; }
  const Matrix& matrix() const { return matrix_; }

  RationalVector apply(const RationalVector& v) const { return matrix_.apply(v); }
  // Sign of w.gamma for a root gamma of the system.
  bool sends_positive(const RationalVector& gamma) const;
  WeylElement inverse() const;
  // Same transformation viewed in an ancestor system.
  WeylElement lifted(const SystemPtr& ancestor) const;
  // w * s_tau, computed as a rank-one update.
  WeylElement times_reflection(SimpleRootLabel tau) const;
  std::size_t length() const;

  // Both operands must live in the same system.
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix_ == b.matrix_; }

 private:
  WeylElement(SystemPtr sys, Matrix m) : system_(std::move(sys)), matrix_(std::move(m)) {}
  SystemPtr system_;
  Matrix matrix_;
};

// letters in written order: the element is s_{letters[0]} ... s_{letters[m-1]},
// so letters.back() acts first.
struct ReducedWord {
  std::vector<SimpleRootLabel> letters;
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
};

WeylElement simple_reflection(const SystemPtr& sys, SimpleRootLabel tau);
WeylElement word_element(const SystemPtr& sys, const ReducedWord& word);
WeylElement longest_element(const SystemPtr& sys);
// omega_Delta * omega_{Delta - {removed}}
WeylElement relative_longest(const SystemPtr& sys, SimpleRootLabel removed);
// Indices into w.system()->positive_roots() of roots sent negative, ascending.
std::vector<std::size_t> inversion_set(const WeylElement& w);
// Greedy: repeatedly peel the smallest-label simple root sent negative.
ReducedWord reduced_word_star(const WeylElement& w);

struct ActionEntry {
  SimpleRootLabel label;
  RationalVector image;
  std::vector<long long> simple_coords;  // over the frame
};

// w0^{-1}(tau) for tau in Delta and for every frame root not orthogonal to Delta.
std::vector<ActionEntry> action_table(const SystemPtr& sys, SimpleRootLabel removed);

}  // namespace relweyl
