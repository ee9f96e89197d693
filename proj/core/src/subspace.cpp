#include "exform/subspace.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace exform {

namespace {

RationalMatrix rows_matrix(const std::vector<Vector>& rows, int cols) {
  RationalMatrix m(rows.size(), static_cast<std::size_t>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

}  // namespace

Subspace::Subspace(int ambient_dim, std::vector<Vector> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  if (ambient_dim < 0 || ambient_dim > kMaxDim) throw std::invalid_argument("subspace: bad ambient dimension");
  if (static_cast<int>(basis_.size()) > ambient_dim) throw std::invalid_argument("subspace: too many basis vectors");
  for (const auto& v : basis_) {
    if (static_cast<int>(v.size()) != ambient_dim) throw std::invalid_argument("subspace: vector length mismatch");
  }
  if (rank(rows_matrix(basis_, ambient_dim)) != basis_.size()) {
    throw std::invalid_argument("subspace: basis is linearly dependent");
  }
}

bool Subspace::contains(const Vector& v) const {
  std::vector<Vector> extended = basis_;
  extended.push_back(v);
  return rank(rows_matrix(extended, ambient_dim_)) == basis_.size();
}

std::vector<Vector> annihilator(const Subspace& c) {
  if (c.dim() == 0) {
    std::vector<Vector> out;
    for (int i = 1; i <= c.ambient_dim(); ++i) out.push_back(basis_vector(c.ambient_dim(), i));
    return out;
  }
  return null_space(rows_matrix(c.basis(), c.ambient_dim()));
}

AdaptedFrame::AdaptedFrame(std::vector<Vector> vectors, int subspace_dim)
    : vectors_(std::move(vectors)), subspace_dim_(subspace_dim) {
  const int n = static_cast<int>(vectors_.size());
  if (subspace_dim < 0 || subspace_dim > n) throw std::invalid_argument("frame: bad subspace dimension");
  RationalMatrix columns(n, n);
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(vectors_[j].size()) != n) throw std::invalid_argument("frame: vector length mismatch");
    for (int i = 0; i < n; ++i) columns(i, j) = vectors_[j][i];
  }
  auto inv = inverse(columns);
  if (!inv) throw std::invalid_argument("frame: vectors do not form a basis");
  std::vector<Vector> dual(n, Vector(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) dual[r][c] = (*inv)(r, c);
  }
  for (int r = subspace_dim; r < n; ++r) covectors_.push_back(std::move(dual[r]));
  for (int r = 0; r < subspace_dim; ++r) covectors_.push_back(std::move(dual[r]));
}

const Vector& AdaptedFrame::dual_vector(int i) const {
  const int k = annihilator_dim();
  return i < k ? vectors_[subspace_dim_ + i] : vectors_[i - k];
}

ExtForm change_basis(const ExtForm& form, const std::vector<std::vector<Rational>>& substitution) {
  const int n = form.dim();
  if (static_cast<int>(substitution.size()) != n) throw DimensionError("change_basis: substitution size mismatch");
  ExtForm out(n, form.degree());
  std::map<std::uint64_t, Rational> partial;
  std::map<std::uint64_t, Rational> next;
  for (const auto& [mask, value] : form.terms()) {
    partial.clear();
    partial.emplace(0, value);
    std::uint64_t rest = mask;
    while (rest != 0 && !partial.empty()) {
      const int i = std::countr_zero(rest);
      rest &= rest - 1;
      next.clear();
      const auto& row = substitution[i];
      for (const auto& [pm, pv] : partial) {
        for (int j = 0; j < n; ++j) {
          const std::uint64_t bit = std::uint64_t{1} << j;
          if (sgn(row[j]) == 0 || (pm & bit) != 0) continue;
          Rational t = pv * row[j];
          if (std::popcount(pm >> j) & 1) t = -t;
          auto [it, inserted] = next.try_emplace(pm | bit, t);
          if (!inserted) it->second += t;
        }
      }
      partial.clear();
      for (auto& [m, v] : next) {
        if (sgn(v) != 0) partial.emplace(m, std::move(v));
      }
    }
    for (const auto& [m, v] : partial) out.add_term(m, v);
  }
  return out;
}

ExtForm AdaptedFrame::to_frame(const ExtForm& form) const {
  const int n = ambient_dim();
  if (form.dim() != n) throw DimensionError("to_frame: dimension mismatch");
  std::vector<std::vector<Rational>> sub(n, std::vector<Rational>(n));
  for (int j = 0; j < n; ++j) {
    const Vector& f = dual_vector(j);
    for (int i = 0; i < n; ++i) sub[i][j] = f[i];
  }
  return change_basis(form, sub);
}

ExtForm AdaptedFrame::from_frame(const ExtForm& framed) const {
  if (framed.dim() != ambient_dim()) throw DimensionError("from_frame: dimension mismatch");
  return change_basis(framed, covectors_);
}

AdaptedFrame adapted_cobase(const Subspace& c) {
  const int n = c.ambient_dim();
  std::vector<Vector> vectors = c.basis();
  std::size_t current_rank = vectors.size();
  for (int i = 1; i <= n && static_cast<int>(vectors.size()) < n; ++i) {
    vectors.push_back(basis_vector(n, i));
    if (rank(rows_matrix(vectors, n)) == current_rank) {
      vectors.pop_back();
    } else {
      ++current_rank;
    }
  }
  return AdaptedFrame(std::move(vectors), c.dim());
}

Decomposition decompose(const ExtForm& omega, const AdaptedFrame& frame) {
  if (omega.is_zero()) throw std::invalid_argument("decompose: the zero form has no main part");
  const int k = frame.annihilator_dim();
  const std::uint64_t block = k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
  ExtForm framed = frame.to_frame(omega);
  std::map<int, ExtForm> groups;
  for (const auto& [mask, value] : framed.terms()) {
    const int s = std::popcount(mask & block);
    auto it = groups.try_emplace(s, omega.dim(), omega.degree()).first;
    it->second.add_term(mask, value);
  }
  Decomposition out{frame, {}};
  for (auto& [s, part] : groups) {
    ExtForm standard = frame.from_frame(part);
    out.parts.push_back(DecompositionPart{s, std::move(part), std::move(standard)});
  }
  return out;
}

std::pair<ExtForm, int> main_part(const ExtForm& omega, const Subspace& c) {
  Decomposition d = decompose(omega, adapted_cobase(c));
  return {d.main_part().form, d.main_degree()};
}

int main_degree(const ExtForm& omega, const Subspace& c) {
  if (omega.is_zero()) throw std::invalid_argument("main_degree: the zero form has no main part");
  if (c.ambient_dim() != omega.dim()) throw DimensionError("main_degree: dimension mismatch");
  const auto& basis = c.basis();
  const int limit = std::min(c.dim(), omega.degree());
  int best = 0;
  std::function<void(int, const ExtForm&, int)> search = [&](int start, const ExtForm& current, int depth) {
    best = std::max(best, depth);
    for (int i = start; i < c.dim() && best < limit; ++i) {
      if (depth + (c.dim() - i) <= best) return;
      ExtForm next = interior(basis[i], current);
      if (!next.is_zero()) search(i + 1, next, depth + 1);
    }
  };
  search(0, omega, 0);
  return omega.degree() - best;
}

bool in_annihilator_algebra(const ExtForm& omega, const Subspace& c) {
  for (const auto& v : c.basis()) {
    if (!interior(v, omega).is_zero()) return false;
  }
  return true;
}

Derivative extract_derivative(const ExtForm& omega, const Subspace& c) {
  if (omega.is_zero()) throw std::invalid_argument("extract_derivative: zero form");
  const int s = main_part(omega, c).second;
  const int j = omega.degree() - s;
  if (j == 0) return Derivative{{}, omega};
  if (j > c.dim()) {
    throw std::logic_error("extract_derivative: derivative order exceeds dim C");
  }
  for (std::uint64_t subset : lex_subsets(c.dim(), j)) {
    std::vector<Vector> vs;
    for (int index : MultiIndex(subset).indices()) vs.push_back(c.basis()[index - 1]);
    ExtForm result = iterated_interior(vs, omega);
    if (!result.is_zero() && in_annihilator_algebra(result, c)) return Derivative{std::move(vs), std::move(result)};
  }
  throw std::logic_error("extract_derivative: no nonzero derivative found among basis subsets");
}

}  // namespace exform
