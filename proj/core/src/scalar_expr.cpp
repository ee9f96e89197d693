#include "exform/scalar_expr.hpp"

#include <cmath>

namespace exform {

namespace {

int unify(int a_vars, bool a_empty, int b_vars, bool b_empty) {
  if (a_vars == b_vars) return a_vars;
  if (a_empty) return b_vars;
  if (b_empty) return a_vars;
  throw std::invalid_argument("scalar expressions over different coordinate counts");
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Rational rational_power(const Rational& base, int e) {
  Rational out = 1;
  Rational factor = e >= 0 ? base : Rational(1 / base);
  for (int i = 0; i < std::abs(e); ++i) out *= factor;
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Poly

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int index) {
  Poly p(nvars);
  Exponents e(nvars, 0);
  e.at(index) = 1;
  p.add_term(e, Rational(1));
  return p;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("poly: exponent length mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly Poly::derivative(int index) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents d = e;
    --d[index];
    out.add_term(d, c * e[index]);
  }
  return out;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] != 0) t *= rational_power(point[i], e[i]);
    }
    total += t;
  }
  return total;
}

double Poly::evaluate(const std::vector<double>& point) const {
  double total = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] != 0) t *= std::pow(point[i], e[i]);
    }
    total += t;
  }
  return total;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out(unify(a.nvars_, a.is_zero(), b.nvars_, b.is_zero()));
  out.terms_ = a.terms_;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

Poly operator-(const Poly& a) {
  Poly out(a.nvars_);
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, Rational(-c));
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(unify(a.nvars_, a.is_zero(), b.nvars_, b.is_zero()));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(add_exponents(ea, eb), ca * cb);
  }
  return out;
}

// ---------------------------------------------------------------- ExpValue

void ExpValue::add(const Rational& exponent, const Rational& coefficient) {
  if (sgn(coefficient) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

double ExpValue::to_double() const {
  double total = 0.0;
  for (const auto& [q, c] : terms_) total += c.get_d() * std::exp(q.get_d());
  return total;
}

ExpValue operator+(const ExpValue& a, const ExpValue& b) {
  ExpValue out = a;
  for (const auto& [q, c] : b.terms_) out.add(q, c);
  return out;
}

ExpValue operator-(const ExpValue& a) {
  ExpValue out;
  for (const auto& [q, c] : a.terms_) out.terms_.emplace(q, Rational(-c));
  return out;
}

ExpValue operator-(const ExpValue& a, const ExpValue& b) { return a + (-b); }

ExpValue operator*(const ExpValue& a, const ExpValue& b) {
  ExpValue out;
  for (const auto& [qa, ca] : a.terms_) {
    for (const auto& [qb, cb] : b.terms_) out.add(qa + qb, ca * cb);
  }
  return out;
}

// ---------------------------------------------------------------- ScalarExpr

ScalarExpr ScalarExpr::constant(int nvars, const Rational& c) {
  ScalarExpr s(nvars);
  s.add_term(Key{Exponents(nvars, 0), Poly(nvars)}, c);
  return s;
}

ScalarExpr ScalarExpr::power(int nvars, int index, int power) {
  ScalarExpr s(nvars);
  Exponents e(nvars, 0);
  e.at(index) = power;
  s.add_term(Key{e, Poly(nvars)}, Rational(1));
  return s;
}

ScalarExpr ScalarExpr::exp(const Poly& exponent) {
  ScalarExpr s(exponent.nvars());
  s.add_term(Key{Exponents(exponent.nvars(), 0), exponent}, Rational(1));
  return s;
}

ScalarExpr ScalarExpr::from_poly(const Poly& p) {
  ScalarExpr s(p.nvars());
  for (const auto& [e, c] : p.terms()) s.add_term(Key{e, Poly(p.nvars())}, c);
  return s;
}

void ScalarExpr::add_term(const Key& key, const Rational& c) {
  if (static_cast<int>(key.monomial.size()) != nvars_) {
    throw std::invalid_argument("scalar expression: exponent length mismatch");
  }
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool ScalarExpr::is_constant() const { return constant_value().has_value(); }

std::optional<Rational> ScalarExpr::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1) return std::nullopt;
  const auto& [key, c] = *terms_.begin();
  for (int e : key.monomial) {
    if (e != 0) return std::nullopt;
  }
  if (!key.exponent.is_zero()) return std::nullopt;
  return c;
}

std::optional<Poly> ScalarExpr::as_poly() const {
  Poly out(nvars_);
  for (const auto& [key, c] : terms_) {
    if (!key.exponent.is_zero()) return std::nullopt;
    for (int e : key.monomial) {
      if (e < 0) return std::nullopt;
    }
    out.add_term(key.monomial, c);
  }
  return out;
}

ScalarExpr ScalarExpr::derivative(int index) const {
  ScalarExpr out(nvars_);
  for (const auto& [key, c] : terms_) {
    const int e = key.monomial[index];
    if (e != 0) {
      Key d = key;
      --d.monomial[index];
      out.add_term(d, c * e);
    }
    Poly dp = key.exponent.derivative(index);
    for (const auto& [pe, pc] : dp.terms()) {
      out.add_term(Key{add_exponents(key.monomial, pe), key.exponent}, c * pc);
    }
  }
  return out;
}

ExpValue ScalarExpr::evaluate_exact(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_ && !terms_.empty()) {
    throw std::invalid_argument("evaluate: point dimension mismatch");
  }
  ExpValue out;
  for (const auto& [key, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i) {
      const int e = key.monomial[i];
      if (e == 0) continue;
      if (e < 0 && sgn(point[i]) == 0) throw PoleError("negative power of a coordinate that vanishes at the point");
      t *= rational_power(point[i], e);
    }
    out.add(key.exponent.evaluate(point), t);
  }
  return out;
}

double ScalarExpr::evaluate(const std::vector<double>& point) const {
  if (static_cast<int>(point.size()) != nvars_ && !terms_.empty()) {
    throw std::invalid_argument("evaluate: point dimension mismatch");
  }
  double total = 0.0;
  for (const auto& [key, c] : terms_) {
    double t = c.get_d();
    for (int i = 0; i < nvars_; ++i) {
      const int e = key.monomial[i];
      if (e == 0) continue;
      if (e < 0 && point[i] == 0.0) throw PoleError("negative power of a coordinate that vanishes at the point");
      t *= std::pow(point[i], e);
    }
    total += t * std::exp(key.exponent.evaluate(point));
  }
  return total;
}

std::optional<ScalarExpr> ScalarExpr::inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [key, c] = *terms_.begin();
  Exponents m(key.monomial.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = -key.monomial[i];
  ScalarExpr out(nvars_);
  out.add_term(Key{m, -key.exponent}, Rational(1 / c));
  return out;
}

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
  ScalarExpr out(unify(a.nvars_, a.is_zero(), b.nvars_, b.is_zero()));
  out.terms_ = a.terms_;
  for (const auto& [k, c] : b.terms_) out.add_term(k, c);
  return out;
}

ScalarExpr operator-(const ScalarExpr& a) {
  ScalarExpr out(a.nvars_);
  for (const auto& [k, c] : a.terms_) out.terms_.emplace(k, Rational(-c));
  return out;
}

ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) { return a + (-b); }

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
  ScalarExpr out(unify(a.nvars_, a.is_zero(), b.nvars_, b.is_zero()));
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term(ScalarExpr::Key{add_exponents(ka.monomial, kb.monomial), ka.exponent + kb.exponent}, ca * cb);
    }
  }
  return out;
}

std::optional<ScalarExpr> divide_exact(const ScalarExpr& a, const ScalarExpr& b) {
  auto inv = b.inverse();
  if (!inv) return std::nullopt;
  return a * *inv;
}

}  // namespace exform
