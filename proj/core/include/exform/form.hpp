#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "exform/multi_index.hpp"
#include "exform/rational.hpp"

namespace exform {

/// Raised when operands live in different ambient spaces or have incompatible degrees.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Homogeneous sparse exterior form over a coefficient ring `S`.
///
/// Coefficients are indexed by MultiIndex bitmasks and kept in lexicographic
/// order; zero coefficients are never stored. `S` must provide +, -, *, unary -
/// and a free function `is_zero(const S&)` found by ADL.
template <class S>
class BasicForm {
 public:
  using Scalar = S;
  using TermMap = std::map<std::uint64_t, S, LexLess>;

  BasicForm() = default;
  BasicForm(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 0 || dim > kMaxDim) throw DimensionError("ambient dimension out of range");
    if (degree < 0) throw DimensionError("negative degree");
  }

  static BasicForm constant(int dim, S value) {
    BasicForm f(dim, 0);
    f.add_term(0, std::move(value));
    return f;
  }

  /// Unit covector alpha_i (1-based).
  static BasicForm covector(int dim, int index, S value) {
    BasicForm f(dim, 1);
    if (index < 1 || index > dim) throw DimensionError("covector index out of range");
    f.add_term(std::uint64_t{1} << (index - 1), std::move(value));
    return f;
  }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient at a basis term, or S{} when absent.
  S coefficient(std::uint64_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? S{} : it->second;
  }

  /// Accumulates `value` into the coefficient of `mask`; drops the entry if it cancels.
  void add_term(std::uint64_t mask, const S& value) {
    if (is_zero_scalar(value)) return;
    auto [it, inserted] = terms_.try_emplace(mask, value);
    if (!inserted) {
      it->second = it->second + value;
      if (is_zero_scalar(it->second)) terms_.erase(it);
    }
  }

  BasicForm& operator+=(const BasicForm& other) {
    require_same_shape(other);
    for (const auto& [mask, value] : other.terms_) add_term(mask, value);
    return *this;
  }
  BasicForm& operator-=(const BasicForm& other) {
    require_same_shape(other);
    for (const auto& [mask, value] : other.terms_) add_term(mask, S(-value));
    return *this;
  }
  friend BasicForm operator+(BasicForm a, const BasicForm& b) { return a += b; }
  friend BasicForm operator-(BasicForm a, const BasicForm& b) { return a -= b; }
  friend BasicForm operator-(const BasicForm& a) {
    BasicForm out(a.dim_, a.degree_);
    for (const auto& [mask, value] : a.terms_) out.terms_.emplace(mask, S(-value));
    return out;
  }

  /// Scalar multiple.
  BasicForm scaled(const S& factor) const {
    BasicForm out(dim_, degree_);
    for (const auto& [mask, value] : terms_) out.add_term(mask, S(value * factor));
    return out;
  }

  friend bool operator==(const BasicForm& a, const BasicForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  static bool is_zero_scalar(const S& value) {
    using exform::is_zero;
    return is_zero(value);
  }

  void require_same_shape(const BasicForm& other) const {
    if (dim_ != other.dim_) throw DimensionError("dimension mismatch");
    if (degree_ != other.degree_) throw DimensionError("degree mismatch in sum");
  }

  int dim_ = 0;
  int degree_ = 0;
  TermMap terms_;
};

/// Exterior product with shuffle signs. A degree-0 factor acts as scalar multiplication.
template <class S>
BasicForm<S> wedge(const BasicForm<S>& a, const BasicForm<S>& b) {
  if (a.dim() != b.dim()) throw DimensionError("wedge: dimension mismatch");
  BasicForm<S> out(a.dim(), a.degree() + b.degree());
  if (out.degree() > a.dim()) return out;
  for (const auto& [ma, va] : a.terms()) {
    for (const auto& [mb, vb] : b.terms()) {
      if ((ma & mb) != 0) continue;
      S product = va * vb;
      if (shuffle_sign(ma, mb) < 0) product = -product;
      out.add_term(ma | mb, product);
    }
  }
  return out;
}

/// k-fold exterior power; power 0 is the constant 1 supplied by the caller.
template <class S>
BasicForm<S> wedge_power(const BasicForm<S>& a, int k, const S& one) {
  BasicForm<S> out = BasicForm<S>::constant(a.dim(), one);
  for (int i = 0; i < k; ++i) {
    out = wedge(out, a);
    if (out.is_zero()) break;
  }
  return out;
}

/// Contraction by a vector in the standard basis. Uses the degree-weighted
/// convention (iota_v theta)(u...) = deg(theta) * theta(v, u...), which on basis
/// terms reduces to removing alpha_i with sign (-1)^(position of i).
template <class S>
BasicForm<S> interior(const std::vector<S>& v, const BasicForm<S>& theta) {
  if (static_cast<int>(v.size()) != theta.dim()) throw DimensionError("interior: dimension mismatch");
  if (theta.degree() == 0) return BasicForm<S>(theta.dim(), 0);
  BasicForm<S> out(theta.dim(), theta.degree() - 1);
  for (const auto& [mask, value] : theta.terms()) {
    std::uint64_t rest = mask;
    while (rest != 0) {
      int bit = std::countr_zero(rest);
      rest &= rest - 1;
      const S& component = v[bit];
      using exform::is_zero;
      if (is_zero(component)) continue;
      S term = value * component;
      if (count_below(mask, bit) & 1) term = -term;
      out.add_term(mask & ~(std::uint64_t{1} << bit), term);
    }
  }
  return out;
}

/// iota_{[v1 ... vj]} = iota_{v1} iota_{v2} ... iota_{vj}; the last vector acts first.
/// Over-contraction (j > deg) yields the zero degree-0 form.
template <class S>
BasicForm<S> iterated_interior(const std::vector<std::vector<S>>& vs, const BasicForm<S>& theta) {
  for (const auto& v : vs) {
    if (static_cast<int>(v.size()) != theta.dim()) throw DimensionError("iterated_interior: dimension mismatch");
  }
  if (static_cast<int>(vs.size()) > theta.degree()) return BasicForm<S>(theta.dim(), 0);
  BasicForm<S> out = theta;
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
    out = interior(*it, out);
    if (out.is_zero()) return BasicForm<S>(theta.dim(), theta.degree() - static_cast<int>(vs.size()));
  }
  return out;
}

using ExtForm = BasicForm<Rational>;
using FloatForm = BasicForm<double>;
using Vector = std::vector<Rational>;

}  // namespace exform
