#include "exform/exterior.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace exform {

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out;
  std::uint64_t rest = bits_;
  while (rest != 0) {
    out.push_back(std::countr_zero(rest) + 1);
    rest &= rest - 1;
  }
  return out;
}

MultiIndex MultiIndex::from_indices(std::span<const int> indices, int dim) {
  std::uint64_t bits = 0;
  int previous = 0;
  for (int index : indices) {
    if (index <= previous) throw DimensionError("multi-index must be strictly increasing");
    if (index > dim || index > kMaxDim) {
      throw DimensionError("multi-index entry " + std::to_string(index) + " exceeds dimension " +
                           std::to_string(dim));
    }
    bits |= std::uint64_t{1} << (index - 1);
    previous = index;
  }
  return MultiIndex(bits);
}

std::vector<std::uint64_t> lex_subsets(int n, int k) {
  std::vector<std::uint64_t> out;
  if (k < 0 || k > n) return out;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::uint64_t mask = 0;
    for (int p : pick) mask |= std::uint64_t{1} << p;
    out.push_back(mask);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ExtForm make_form(int dim, int degree, const std::vector<Term>& terms) {
  ExtForm out(dim, degree);
  for (const auto& [indices, value] : terms) {
    if (static_cast<int>(indices.size()) != degree) {
      throw DimensionError("term has " + std::to_string(indices.size()) + " indices, expected " +
                           std::to_string(degree));
    }
    out.add_term(MultiIndex::from_indices(indices, dim).bits(), value);
  }
  if (degree > dim && !out.is_zero()) throw DimensionError("degree exceeds dimension");
  return out;
}

Vector basis_vector(int dim, int index) {
  if (index < 1 || index > dim) throw DimensionError("basis index out of range");
  Vector v(dim, Rational(0));
  v[index - 1] = 1;
  return v;
}

namespace {

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

}  // namespace

Rational evaluate(const ExtForm& theta, const std::vector<Vector>& args) {
  const int k = theta.degree();
  if (static_cast<int>(args.size()) != k) throw DimensionError("evaluate: argument count mismatch");
  for (const auto& v : args) {
    if (static_cast<int>(v.size()) != theta.dim()) throw DimensionError("evaluate: dimension mismatch");
  }
  Rational total = 0;
  for (const auto& [mask, value] : theta.terms()) {
    auto idx = MultiIndex(mask).indices();
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) m[i][j] = args[j][idx[i] - 1];
    }
    total += value * determinant(std::move(m));
  }
  mpz_class factorial = 1;
  for (int i = 2; i <= k; ++i) factorial *= i;
  return total / factorial;
}

Rational pairing(const std::vector<Vector>& vs, const ExtForm& theta) {
  if (static_cast<int>(vs.size()) != theta.degree()) throw DimensionError("pairing: length mismatch");
  ExtForm scalar = iterated_interior(vs, theta);
  return scalar.coefficient(0);
}

int reverse_sign(int k) { return ((k * (k - 1) / 2) & 1) ? -1 : 1; }

ExtForm covector_form(const Vector& components) {
  ExtForm out(static_cast<int>(components.size()), 1);
  for (std::size_t i = 0; i < components.size(); ++i) out.add_term(std::uint64_t{1} << i, components[i]);
  return out;
}

Rational apply_covector(const ExtForm& covector, const Vector& v) {
  if (covector.degree() != 1 || covector.dim() != static_cast<int>(v.size())) {
    throw DimensionError("apply_covector: shape mismatch");
  }
  Rational total = 0;
  for (const auto& [mask, value] : covector.terms()) total += value * v[std::countr_zero(mask)];
  return total;
}

ExtForm interior_division(const Vector& x, const ExtForm& mu) {
  if (static_cast<int>(x.size()) != mu.dim()) throw DimensionError("interior_division: dimension mismatch");
  auto nonzero = std::find_if(x.begin(), x.end(), [](const Rational& c) { return sgn(c) != 0; });
  if (nonzero == x.end()) throw std::invalid_argument("interior_division: x must be nonzero");
  if (!interior(x, mu).is_zero()) throw std::invalid_argument("interior_division: iota_x mu is not zero");
  const int i = static_cast<int>(nonzero - x.begin());
  ExtForm a = ExtForm::covector(mu.dim(), i + 1, Rational(1 / x[i]));
  return wedge(a, mu);
}

FloatForm to_float(const ExtForm& form) {
  FloatForm out(form.dim(), form.degree());
  for (const auto& [mask, value] : form.terms()) out.add_term(mask, value.get_d());
  return out;
}

}  // namespace exform
