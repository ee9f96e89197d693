#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exform/form.hpp"
#include "exform/scalar_expr.hpp"
#include "exform/wedge_solver.hpp"

namespace exform {

using SymbolicForm = BasicForm<ScalarExpr>;
using PointForm = BasicForm<ExpValue>;
using Point = std::vector<Rational>;

/// Differential form on a single chart with named coordinates and exact
/// ScalarExpr coefficients.
class DiffForm {
 public:
  DiffForm() = default;
  DiffForm(std::vector<std::string> coords, int degree);
  DiffForm(std::vector<std::string> coords, SymbolicForm form);

  /// Degree-0 form with the given coefficient.
  static DiffForm function(std::vector<std::string> coords, const ScalarExpr& f);
  /// d(coordinate) for a 0-based coordinate index.
  static DiffForm differential(std::vector<std::string> coords, int index);

  const std::vector<std::string>& coords() const { return coords_; }
  int ncoords() const { return static_cast<int>(coords_.size()); }
  int degree() const { return form_.degree(); }
  bool is_zero() const { return form_.is_zero(); }
  const SymbolicForm& form() const { return form_; }

  /// Index of a coordinate name, or -1.
  int coord_index(const std::string& name) const;

  DiffForm scaled(const ScalarExpr& f) const;
  /// True when some coefficient carries a negative power of a coordinate.
  bool has_poles() const;

  friend DiffForm operator+(const DiffForm& a, const DiffForm& b);
  friend DiffForm operator-(const DiffForm& a, const DiffForm& b);
  friend DiffForm operator-(const DiffForm& a);
  friend bool operator==(const DiffForm& a, const DiffForm& b) {
    return a.coords_ == b.coords_ && a.form_ == b.form_;
  }

 private:
  std::vector<std::string> coords_;
  SymbolicForm form_;
};

/// Coordinate lists differ between operands.
class CoordinateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

DiffForm exterior_derivative(const DiffForm& omega);
DiffForm wedge_d(const DiffForm& a, const DiffForm& b);
/// omega ^ ... ^ omega (k factors); k = 0 gives the constant 1.
DiffForm power_d(const DiffForm& omega, int k);

/// Exact value at a rational point. Throws PoleError at a pole.
PointForm eval_exact(const DiffForm& omega, const Point& point);
/// Floating-point value at a rational point.
FloatForm eval_at(const DiffForm& omega, const Point& point);
/// Rational value when every coefficient is rational at the point.
std::optional<ExtForm> eval_rational(const DiffForm& omega, const Point& point);

/// Pointwise rank of a 2-form, decided exactly from its exterior powers.
class RankProbe {
 public:
  explicit RankProbe(const DiffForm& two_form);
  int rank_at(const Point& point) const;

 private:
  std::vector<DiffForm> powers_;  // omega^1, omega^2, ...
};

struct GridAxis {
  Rational lo;
  Rational hi;
  int count = 3;
};

/// Cartesian grid, first coordinate varying slowest.
std::vector<Point> make_grid(const std::vector<GridAxis>& axes);

/// Three points per coordinate in [-1, 1], or in [1/2, 3/2] for coordinates that
/// appear with a negative power in any of the forms.
std::vector<GridAxis> default_axes(const std::vector<const DiffForm*>& forms);

struct LeePointResult {
  Point point;
  int rank = 0;
  bool solvable = false;
  std::optional<FloatForm> beta;
  std::vector<FloatForm> kernel;
  double residual = 0.0;
  bool unique() const { return beta.has_value() && kernel.empty(); }
};

struct LeeSolveResult {
  std::vector<LeePointResult> points;
  bool consistent = false;
};

/// Solves (d omega)_p = beta_p ^ omega_p at each point.
LeeSolveResult lee_solve(const DiffForm& omega, const std::vector<Point>& points);

struct LeeVerification {
  DiffForm d_omega;
  DiffForm residual;  // d omega - beta ^ omega
  DiffForm d_beta;
  DiffForm d_beta_wedge_omega;
  bool holds() const { return residual.is_zero(); }
};

LeeVerification lee_verify(const DiffForm& omega, const DiffForm& beta);

/// The Lee equation fails for the supplied pair; carries the residual.
class HypothesisViolated : public std::runtime_error {
 public:
  HypothesisViolated(const std::string& what, DiffForm residual)
      : std::runtime_error(what), residual_(std::move(residual)) {}
  const DiffForm& residual() const { return residual_; }

 private:
  DiffForm residual_;
};

struct PointClassification {
  Point point;
  int r_omega = 0;
  bool omega_zero = false;
  bool d_beta_zero = false;
  int d_beta_rank = 0;
  bool in_a = false;  // r(omega) > 2
  bool in_b = false;  // d beta != 0 and omega != 0
  bool in_c = false;  // r(omega) <= 1
};

struct Classification {
  std::vector<PointClassification> points;
  bool d_beta_vanishes_on_a = true;
  bool ranks_bounded_on_b = true;
  bool a_b_disjoint = true;
  std::vector<std::size_t> violating_points;
  std::vector<std::size_t> omega_zero_points;
  bool pass() const { return d_beta_vanishes_on_a && ranks_bounded_on_b && a_b_disjoint; }
};

/// Per-point membership in A = {r > 2}, B = {d beta != 0, omega != 0},
/// C = {r <= 1} plus the theorem's assertions on the sample. Throws
/// HypothesisViolated unless d omega = beta ^ omega symbolically.
Classification classify_theorem_sets(const DiffForm& omega, const DiffForm& beta, const std::vector<Point>& grid);

struct CosymplecticReport {
  DiffForm d_eta;
  DiffForm residual;  // d Phi - 2 alpha eta ^ Phi
  bool implication_checked = false;
  std::optional<DiffForm> dalpha_wedge_eta;
  std::optional<ScalarExpr> f;  // d alpha = f eta, when representable
  bool f_representable = false;

  bool eta_closed() const { return d_eta.is_zero(); }
  bool structure_holds() const { return residual.is_zero(); }
  bool implication_holds() const { return !implication_checked || (dalpha_wedge_eta && dalpha_wedge_eta->is_zero()); }
  bool pass() const { return eta_closed() && structure_holds() && implication_holds(); }
};

CosymplecticReport cosymplectic_check(const DiffForm& phi, const DiffForm& eta, const ScalarExpr& alpha);

/// beta ^ d beta for a 1-form.
DiffForm frobenius_residual(const DiffForm& beta);

}  // namespace exform
