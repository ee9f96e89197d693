#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "exform/rational.hpp"

namespace exform {

/// Exponent vector over the coordinates; negative entries allowed only in
/// Laurent monomials.
using Exponents = std::vector<int>;

/// Raised when a Laurent monomial is evaluated where one of its negative-power
/// coordinates vanishes.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Polynomial with rational coefficients and nonnegative exponents. Terms are
/// kept in descending lexicographic order of exponent vectors.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational, std::greater<>>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& c);

  Poly derivative(int index) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  double evaluate(const std::vector<double>& point) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const Poly& a, const Poly& b) { return a.terms_ < b.terms_; }

 private:
  int nvars_ = 0;
  TermMap terms_;
};

/// Value of a coefficient at a rational point: sum of c_q * e^q with distinct
/// rational exponents q. Such sums vanish only when every c_q does, so zero
/// testing is exact.
class ExpValue {
 public:
  ExpValue() = default;
  ExpValue(const Rational& c) { add(Rational(0), c); }  // NOLINT: implicit from scalars

  void add(const Rational& exponent, const Rational& coefficient);
  const std::map<Rational, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  double to_double() const;

  friend ExpValue operator+(const ExpValue& a, const ExpValue& b);
  friend ExpValue operator-(const ExpValue& a, const ExpValue& b);
  friend ExpValue operator-(const ExpValue& a);
  friend ExpValue operator*(const ExpValue& a, const ExpValue& b);
  friend bool operator==(const ExpValue& a, const ExpValue& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Rational, Rational> terms_;
};

inline bool is_zero(const ExpValue& v) { return v.is_zero(); }

/// Exact coefficient function: finite sum of c * (Laurent monomial) * exp(poly).
///
/// Terms are merged by (monomial, exponent polynomial), so two expressions are
/// equal as functions exactly when their canonical term maps agree.
class ScalarExpr {
 public:
  struct Key {
    Exponents monomial;
    Poly exponent;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      if (a.monomial != b.monomial) return a.monomial > b.monomial;
      return a.exponent < b.exponent;
    }
  };
  using TermMap = std::map<Key, Rational, KeyLess>;

  ScalarExpr() = default;
  explicit ScalarExpr(int nvars) : nvars_(nvars) {}

  static ScalarExpr constant(int nvars, const Rational& c);
  /// x_index^power (index 0-based); power may be negative.
  static ScalarExpr power(int nvars, int index, int power);
  static ScalarExpr exp(const Poly& exponent);
  static ScalarExpr from_poly(const Poly& p);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Rational value of a constant expression.
  std::optional<Rational> constant_value() const;
  /// Converts to a polynomial when there are no exponentials and no negative powers.
  std::optional<Poly> as_poly() const;

  void add_term(const Key& key, const Rational& c);

  ScalarExpr derivative(int index) const;
  ExpValue evaluate_exact(const std::vector<Rational>& point) const;
  double evaluate(const std::vector<double>& point) const;

  /// Multiplicative inverse of a single-term expression; nullopt otherwise.
  std::optional<ScalarExpr> inverse() const;

  friend ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator-(const ScalarExpr& a);
  friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
  friend bool operator==(const ScalarExpr& a, const ScalarExpr& b) { return a.terms_ == b.terms_; }

 private:
  int nvars_ = 0;
  TermMap terms_;
};

inline bool is_zero(const ScalarExpr& s) { return s.is_zero(); }

/// a / b when b is a single term (a unit of the ring); nullopt otherwise.
std::optional<ScalarExpr> divide_exact(const ScalarExpr& a, const ScalarExpr& b);

}  // namespace exform
