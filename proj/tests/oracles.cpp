#include "oracles.hpp"

#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace oracle {

using relweyl::Rational;
using relweyl::RootSystem;

namespace {

using Gram = std::vector<std::vector<Rational>>;

Gram gram(const RootSystem& sys) {
  const auto& d = sys.delta();
  Gram g(d.size(), std::vector<Rational>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) g[i][j] = relweyl::dot(d[i].ambient, d[j].ambient);
  }
  return g;
}

Rational form(const Gram& g, const std::vector<long long>& x, const std::vector<long long>& y) {
  Rational out(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) out += Rational(x[i] * y[j]) * g[i][j];
  }
  return out;
}

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  std::size_t n = a.size();
  IntMatrix c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

// s_i(tau_j) = tau_j - <tau_j, tau_i^vee> tau_i.
IntMatrix reflection(const IntMatrix& a, std::size_t i) {
  IntMatrix m = identity(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) m[i][j] -= a[j][i];
  return m;
}

bool column_positive(const IntMatrix& m, std::size_t j) {
  for (const auto& row : m) {
    if (row[j] < 0) return false;
  }
  return true;
}

const IntMatrix& unique_longest(const std::vector<const Element*>& candidates) {
  const Element* best = nullptr;
  bool tie = false;
  for (const auto* e : candidates) {
    if (best == nullptr || e->length > best->length) {
      best = e;
      tie = false;
    } else if (e->length == best->length) {
      tie = true;
    }
  }
  if (best == nullptr || tie) throw std::logic_error("no unique longest element");
  return best->m;
}

}  // namespace

IntMatrix cartan(const RootSystem& sys) {
  const auto& d = sys.delta();
  IntMatrix a(d.size(), std::vector<long long>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) a[i][j] = relweyl::pairing(d[i].ambient, d[j].ambient).to_int();
  }
  return a;
}

std::vector<std::vector<long long>> closure_positive_roots(const RootSystem& sys) {
  auto g = gram(sys);
  std::size_t n = sys.rank();
  std::set<std::vector<long long>> roots;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long long> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    for (auto& x : e) x = -x;
    roots.insert(e);
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::vector<long long>> current(roots.begin(), roots.end());
    for (const auto& beta : current) {
      Rational bb = form(g, beta, beta);
      for (const auto& x : current) {
        long long c = (Rational(2) * form(g, x, beta) / bb).to_int();
        auto y = x;
        for (std::size_t k = 0; k < n; ++k) y[k] -= c * beta[k];
        grew = roots.insert(y).second || grew;
      }
    }
  }
  std::vector<std::vector<long long>> positive;
  for (const auto& r : roots) {
    bool pos = true;
    for (long long c : r) pos = pos && c >= 0;
    if (pos) positive.push_back(r);
  }
  return positive;
}

std::vector<Element> enumerate_weyl_group(const RootSystem& sys) {
  auto a = cartan(sys);
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < a.size(); ++i) gens.push_back(reflection(a, i));
  std::map<IntMatrix, std::size_t> seen;
  std::vector<Element> out;
  std::queue<std::size_t> frontier;
  seen.emplace(identity(a.size()), 0);
  out.push_back({identity(a.size()), 0});
  frontier.push(0);
  while (!frontier.empty()) {
    std::size_t k = frontier.front();
    frontier.pop();
    for (const auto& s : gens) {
      auto m = multiply(out[k].m, s);
      if (seen.count(m)) continue;
      seen.emplace(m, out.size());
      out.push_back({m, out[k].length + 1});
      frontier.push(out.size() - 1);
    }
  }
  return out;
}

IntMatrix brute_longest(const RootSystem& sys) {
  auto all = enumerate_weyl_group(sys);
  std::vector<const Element*> c;
  for (const auto& e : all) c.push_back(&e);
  return unique_longest(c);
}

IntMatrix brute_relative_longest(const RootSystem& sys, relweyl::SimpleRootLabel removed) {
  auto all = enumerate_weyl_group(sys);
  std::size_t skip = static_cast<std::size_t>(sys.canonical_index(removed) - 1);
  std::vector<const Element*> c;
  for (const auto& e : all) {
    bool keeps = true;
    for (std::size_t j = 0; j < sys.rank(); ++j) keeps = keeps && (j == skip || column_positive(e.m, j));
    if (keeps) c.push_back(&e);
  }
  return unique_longest(c);
}

IntMatrix simple_action(const RootSystem& sys, const relweyl::Matrix& ambient) {
  const auto& d = sys.delta();
  IntMatrix m(d.size(), std::vector<long long>(d.size()));
  for (std::size_t j = 0; j < d.size(); ++j) {
    auto coords = sys.frame().coordinates(ambient.apply(d[j].ambient));
    for (std::size_t i = 0; i < d.size(); ++i) m[i][j] = coords[sys.frame().position(d[i].label)].to_int();
  }
  return m;
}

Rational slope_oracle(const RootSystem& sys, relweyl::SimpleRootLabel removed, const relweyl::Root& beta) {
  const auto& alpha = sys.simple(removed).ambient;
  return Rational(sys.coeff(beta, removed)) * relweyl::dot(alpha, alpha) / relweyl::dot(beta.ambient, beta.ambient);
}

}  // namespace oracle
