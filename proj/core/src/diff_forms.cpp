#include "exform/diff_forms.hpp"

#include <algorithm>

namespace exform {

namespace {

void require_same_coords(const DiffForm& a, const DiffForm& b, const char* what) {
  if (a.coords() != b.coords()) throw CoordinateError(std::string(what) + ": coordinate lists differ");
}

ScalarExpr one(int n) { return ScalarExpr::constant(n, Rational(1)); }

}  // namespace

DiffForm::DiffForm(std::vector<std::string> coords, int degree)
    : coords_(std::move(coords)), form_(static_cast<int>(coords_.size()), degree) {}

DiffForm::DiffForm(std::vector<std::string> coords, SymbolicForm form)
    : coords_(std::move(coords)), form_(std::move(form)) {
  if (form_.dim() != static_cast<int>(coords_.size())) throw CoordinateError("form dimension differs from coordinate count");
}

DiffForm DiffForm::function(std::vector<std::string> coords, const ScalarExpr& f) {
  const int n = static_cast<int>(coords.size());
  return DiffForm(std::move(coords), SymbolicForm::constant(n, f));
}

DiffForm DiffForm::differential(std::vector<std::string> coords, int index) {
  const int n = static_cast<int>(coords.size());
  return DiffForm(std::move(coords), SymbolicForm::covector(n, index + 1, one(n)));
}

int DiffForm::coord_index(const std::string& name) const {
  auto it = std::find(coords_.begin(), coords_.end(), name);
  return it == coords_.end() ? -1 : static_cast<int>(it - coords_.begin());
}

DiffForm DiffForm::scaled(const ScalarExpr& f) const { return DiffForm(coords_, form_.scaled(f)); }

bool DiffForm::has_poles() const {
  for (const auto& [mask, coeff] : form_.terms()) {
    for (const auto& [key, c] : coeff.terms()) {
      for (int e : key.monomial) {
        if (e < 0) return true;
      }
    }
  }
  return false;
}

DiffForm operator+(const DiffForm& a, const DiffForm& b) {
  require_same_coords(a, b, "sum");
  return DiffForm(a.coords_, a.form_ + b.form_);
}

DiffForm operator-(const DiffForm& a, const DiffForm& b) {
  require_same_coords(a, b, "difference");
  return DiffForm(a.coords_, a.form_ - b.form_);
}

DiffForm operator-(const DiffForm& a) { return DiffForm(a.coords_, -a.form_); }

DiffForm exterior_derivative(const DiffForm& omega) {
  const int n = omega.ncoords();
  SymbolicForm out(n, omega.degree() + 1);
  if (out.degree() > n) return DiffForm(omega.coords(), out);
  for (const auto& [mask, coeff] : omega.form().terms()) {
    for (int i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (mask & bit) continue;
      ScalarExpr partial = coeff.derivative(i);
      if (partial.is_zero()) continue;
      // dx_i ^ dx_I: move dx_i past the indices of I below i.
      if (count_below(mask, i) & 1) partial = -partial;
      out.add_term(mask | bit, partial);
    }
  }
  return DiffForm(omega.coords(), std::move(out));
}

DiffForm wedge_d(const DiffForm& a, const DiffForm& b) {
  require_same_coords(a, b, "wedge");
  return DiffForm(a.coords(), wedge(a.form(), b.form()));
}

DiffForm power_d(const DiffForm& omega, int k) {
  return DiffForm(omega.coords(), wedge_power(omega.form(), k, one(omega.ncoords())));
}

PointForm eval_exact(const DiffForm& omega, const Point& point) {
  if (static_cast<int>(point.size()) != omega.ncoords()) throw DimensionError("eval: point dimension mismatch");
  PointForm out(omega.ncoords(), omega.degree());
  for (const auto& [mask, coeff] : omega.form().terms()) out.add_term(mask, coeff.evaluate_exact(point));
  return out;
}

FloatForm eval_at(const DiffForm& omega, const Point& point) {
  FloatForm out(omega.ncoords(), omega.degree());
  const PointForm exact = eval_exact(omega, point);
  for (const auto& [mask, value] : exact.terms()) out.add_term(mask, value.to_double());
  return out;
}

std::optional<ExtForm> eval_rational(const DiffForm& omega, const Point& point) {
  ExtForm out(omega.ncoords(), omega.degree());
  const PointForm exact = eval_exact(omega, point);
  for (const auto& [mask, value] : exact.terms()) {
    if (value.terms().size() != 1 || sgn(value.terms().begin()->first) != 0) return std::nullopt;
    out.add_term(mask, value.terms().begin()->second);
  }
  return out;
}

RankProbe::RankProbe(const DiffForm& two_form) {
  if (two_form.degree() != 2) throw DimensionError("rank probe: form must have degree 2");
  DiffForm power = DiffForm::function(two_form.coords(), one(two_form.ncoords()));
  for (int k = 1; 2 * k <= two_form.ncoords(); ++k) {
    power = wedge_d(power, two_form);
    if (power.is_zero()) break;
    powers_.push_back(power);
  }
}

int RankProbe::rank_at(const Point& point) const {
  int r = 0;
  for (const auto& power : powers_) {
    if (eval_exact(power, point).is_zero()) break;
    ++r;
  }
  return r;
}

std::vector<Point> make_grid(const std::vector<GridAxis>& axes) {
  std::vector<Point> grid{Point{}};
  for (const auto& axis : axes) {
    if (axis.count < 1) throw std::invalid_argument("grid: count must be positive");
    std::vector<Rational> values;
    for (int i = 0; i < axis.count; ++i) {
      if (axis.count == 1) {
        values.push_back(axis.lo);
      } else {
        values.push_back(axis.lo + (axis.hi - axis.lo) * Rational(i, axis.count - 1));
      }
    }
    std::vector<Point> next;
    next.reserve(grid.size() * values.size());
    for (const auto& prefix : grid) {
      for (const auto& v : values) {
        Point p = prefix;
        p.push_back(v);
        next.push_back(std::move(p));
      }
    }
    grid = std::move(next);
  }
  return grid;
}

std::vector<GridAxis> default_axes(const std::vector<const DiffForm*>& forms) {
  if (forms.empty()) return {};
  const int n = forms.front()->ncoords();
  std::vector<bool> pole(n, false);
  for (const DiffForm* f : forms) {
    for (const auto& [mask, coeff] : f->form().terms()) {
      for (const auto& [key, c] : coeff.terms()) {
        for (int i = 0; i < n; ++i) {
          if (key.monomial[i] < 0) pole[i] = true;
        }
      }
    }
  }
  std::vector<GridAxis> axes;
  for (int i = 0; i < n; ++i) {
    if (pole[i]) {
      axes.push_back(GridAxis{Rational(1, 2), Rational(3, 2), 3});
    } else {
      axes.push_back(GridAxis{Rational(-1), Rational(1), 3});
    }
  }
  return axes;
}

LeeSolveResult lee_solve(const DiffForm& omega, const std::vector<Point>& points) {
  if (omega.degree() != 2) throw DimensionError("lee_solve: omega must be a 2-form");
  const DiffForm d_omega = exterior_derivative(omega);
  const RankProbe probe(omega);
  LeeSolveResult out;
  out.consistent = true;
  for (const auto& p : points) {
    LeePointResult r;
    r.point = p;
    r.rank = probe.rank_at(p);
    FloatWedgeSolution sol = solve_wedge(eval_at(omega, p), eval_at(d_omega, p));
    r.solvable = sol.particular.has_value();
    r.beta = std::move(sol.particular);
    r.kernel = std::move(sol.kernel_basis);
    r.residual = sol.residual;
    if (!r.solvable || (r.rank >= 2 && !r.unique())) out.consistent = false;
    out.points.push_back(std::move(r));
  }
  return out;
}

LeeVerification lee_verify(const DiffForm& omega, const DiffForm& beta) {
  if (omega.degree() != 2) throw DimensionError("lee_verify: omega must be a 2-form");
  if (beta.degree() != 1) throw DimensionError("lee_verify: beta must be a 1-form");
  require_same_coords(omega, beta, "lee_verify");
  LeeVerification v;
  v.d_omega = exterior_derivative(omega);
  v.residual = v.d_omega - wedge_d(beta, omega);
  v.d_beta = exterior_derivative(beta);
  v.d_beta_wedge_omega = wedge_d(v.d_beta, omega);
  return v;
}

Classification classify_theorem_sets(const DiffForm& omega, const DiffForm& beta, const std::vector<Point>& grid) {
  LeeVerification lee = lee_verify(omega, beta);
  if (!lee.holds()) throw HypothesisViolated("d omega != beta ^ omega", lee.residual);
  const RankProbe omega_rank(omega);
  const RankProbe d_beta_rank(lee.d_beta);
  Classification out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Point& p = grid[i];
    PointClassification pc;
    pc.point = p;
    pc.r_omega = omega_rank.rank_at(p);
    pc.omega_zero = eval_exact(omega, p).is_zero();
    pc.d_beta_zero = eval_exact(lee.d_beta, p).is_zero();
    pc.d_beta_rank = d_beta_rank.rank_at(p);
    pc.in_a = pc.r_omega > 2;
    pc.in_b = !pc.d_beta_zero && !pc.omega_zero;
    pc.in_c = pc.r_omega <= 1;

    bool bad = false;
    if (pc.in_a && !pc.d_beta_zero) {
      out.d_beta_vanishes_on_a = false;
      bad = true;
    }
    if (pc.in_b && (pc.d_beta_rank < 1 || pc.d_beta_rank > 2 || pc.r_omega < 1 || pc.r_omega > 2)) {
      out.ranks_bounded_on_b = false;
      bad = true;
    }
    if (pc.in_a && pc.in_b) {
      out.a_b_disjoint = false;
      bad = true;
    }
    if (bad) out.violating_points.push_back(i);
    if (pc.omega_zero) out.omega_zero_points.push_back(i);
    out.points.push_back(std::move(pc));
  }
  return out;
}

CosymplecticReport cosymplectic_check(const DiffForm& phi, const DiffForm& eta, const ScalarExpr& alpha) {
  if (phi.degree() != 2) throw DimensionError("cosymplectic_check: Phi must be a 2-form");
  if (eta.degree() != 1) throw DimensionError("cosymplectic_check: eta must be a 1-form");
  require_same_coords(phi, eta, "cosymplectic_check");
  const int n = phi.ncoords();
  CosymplecticReport report;
  report.d_eta = exterior_derivative(eta);
  const ScalarExpr two_alpha = ScalarExpr::constant(n, Rational(2)) * alpha;
  report.residual = exterior_derivative(phi) - wedge_d(eta, phi).scaled(two_alpha);
  if (!report.eta_closed() || !report.structure_holds() || n <= 5) return report;

  report.implication_checked = true;
  const DiffForm d_alpha = exterior_derivative(DiffForm::function(phi.coords(), alpha));
  report.dalpha_wedge_eta = wedge_d(d_alpha, eta);
  if (d_alpha.is_zero()) {
    report.f = ScalarExpr::constant(n, Rational(0));
    report.f_representable = true;
  } else if (!eta.is_zero()) {
    const auto& [mask, eta_coeff] = *eta.form().terms().begin();
    if (auto f = divide_exact(d_alpha.form().coefficient(mask), eta_coeff)) {
      if (eta.scaled(*f) == d_alpha) {
        report.f = std::move(f);
        report.f_representable = true;
      }
    }
  }
  return report;
}

DiffForm frobenius_residual(const DiffForm& beta) {
  if (beta.degree() != 1) throw DimensionError("frobenius_residual: beta must be a 1-form");
  return wedge_d(beta, exterior_derivative(beta));
}

}  // namespace exform
