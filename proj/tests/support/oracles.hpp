#pragma once

// Test-only generators and brute-force oracles. Nothing here calls the code
// paths it is used to check.

#include <algorithm>
#include <numeric>
#include <vector>

#include "exform/exterior.hpp"
#include "exform/random.hpp"

namespace exform::testing {

inline int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return (inversions & 1) ? -1 : 1;
}

/// theta(x_1..x_k) by explicit antisymmetrization over all permutations,
/// divided by k! (the normalization where alpha_1^...^alpha_k(e_1..e_k) = 1/k!).
inline Rational antisymmetrized_value(const ExtForm& theta, const std::vector<Vector>& args) {
  const int k = theta.degree();
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  for (const auto& [mask, value] : theta.terms()) {
    auto idx = MultiIndex(mask).indices();
    std::vector<int> p = perm;
    do {
      Rational prod = value * permutation_sign(p);
      for (int i = 0; i < k; ++i) prod *= args[p[i]][idx[i] - 1];
      total += prod;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  mpz_class fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  return total / fact;
}

/// Determinant by Leibniz expansion.
inline Rational leibniz_det(const std::vector<std::vector<Rational>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    Rational prod = permutation_sign(p);
    for (int i = 0; i < n; ++i) prod *= m[i][p[i]];
    total += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline Vector random_vector(int n, CounterRng& rng) {
  Vector v(n);
  for (auto& x : v) x = rng.rational(4, 3);
  return v;
}

inline ExtForm random_sparse_form(int n, int degree, CounterRng& rng) {
  ExtForm out(n, degree);
  auto count = rng.uniform(1, 4);
  for (int t = 0; t < count; ++t) {
    std::uint64_t mask = 0;
    while (std::popcount(mask) < degree) mask |= std::uint64_t{1} << rng.uniform(0, n - 1);
    out.add_term(mask, rng.rational(5, 4));
  }
  return out;
}

/// Rank by plain Gauss-Jordan over Q, used to check the Bareiss path.
inline std::size_t naive_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// lambda^k matrix assembled column by column from wedges with basis forms.
inline std::vector<std::vector<Rational>> brute_lambda(const ExtForm& omega, int k) {
  const int n = omega.dim();
  auto rows = lex_subsets(n, k + 2);
  auto cols = lex_subsets(n, k);
  std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    ExtForm b(n, k);
    b.add_term(cols[c], Rational(1));
    ExtForm image = wedge(omega, b);
    for (std::size_t r = 0; r < rows.size(); ++r) m[r][c] = image.coefficient(rows[r]);
  }
  return m;
}

/// Dimension of the span of same-degree forms.
inline std::size_t span_rank(const std::vector<ExtForm>& forms) {
  if (forms.empty()) return 0;
  auto labels = lex_subsets(forms[0].dim(), forms[0].degree());
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : forms) {
    std::vector<Rational> row;
    for (auto m : labels) row.push_back(f.coefficient(m));
    rows.push_back(row);
  }
  return naive_rank(rows);
}

}  // namespace exform::testing
