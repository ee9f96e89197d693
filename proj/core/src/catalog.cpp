#include "exform/catalog.hpp"

#include <stdexcept>

namespace exform {

namespace {

class Chart {
 public:
  explicit Chart(std::vector<std::string> coords) : coords_(std::move(coords)) {}

  int index(const std::string& name) const {
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] == name) return static_cast<int>(i);
    }
    throw std::invalid_argument("unknown coordinate " + name);
  }
  int n() const { return static_cast<int>(coords_.size()); }
  ScalarExpr c(long v) const { return ScalarExpr::constant(n(), Rational(v)); }
  ScalarExpr x(const std::string& name, int power = 1) const { return ScalarExpr::power(n(), index(name), power); }
  Poly px(const std::string& name) const { return Poly::variable(n(), index(name)); }
  DiffForm d(const std::string& name) const { return DiffForm::differential(coords_, index(name)); }
  DiffForm fn(const ScalarExpr& f) const { return DiffForm::function(coords_, f); }
  const std::vector<std::string>& coords() const { return coords_; }

 private:
  std::vector<std::string> coords_;
};

IdentityCheck equation(std::string name, std::string statement, const DiffForm& lhs, const DiffForm& rhs) {
  DiffForm residual = lhs - rhs;
  const bool holds = residual.is_zero();
  return IdentityCheck{std::move(name), std::move(statement), holds, std::move(residual)};
}

IdentityCheck nonvanishing(std::string name, std::string statement, const DiffForm& form) {
  return IdentityCheck{std::move(name), std::move(statement), !form.is_zero(), form};
}

struct OmegaF {
  DiffForm omega;
  DiffForm beta;
};

// omega_0 and beta_0 on any chart that contains x1, x2, y1, y2.
OmegaF omega_zero(const Chart& ch) {
  Poly f0 = ch.px("x1") * ch.px("y1") + ch.px("x2") * ch.px("y2");
  DiffForm omega = wedge_d(ch.d("x1"), ch.d("x2")).scaled(ScalarExpr::exp(f0)) + wedge_d(ch.d("y1"), ch.d("y2"));
  DiffForm beta = ch.d("y1").scaled(ch.x("x1")) + ch.d("y2").scaled(ch.x("x2"));
  return {omega, beta};
}

CatalogEntry omega_f_entry() {
  Chart ch({"x1", "x2", "y1", "y2"});
  auto [omega, beta] = omega_zero(ch);
  DiffForm d_beta_expected = wedge_d(ch.d("x1"), ch.d("y1")) + wedge_d(ch.d("x2"), ch.d("y2"));
  DiffForm d_omega = exterior_derivative(omega);
  DiffForm d_beta = exterior_derivative(beta);

  CatalogEntry e;
  e.name = "omega_f";
  e.coords = ch.coords();
  e.forms = {{"omega0", omega}, {"beta0", beta}, {"dbeta0", d_beta_expected}};
  e.identities.push_back(equation("d_omega0_eq_beta0_wedge_omega0", "d omega0 = beta0 ^ omega0", d_omega,
                                  wedge_d(beta, omega)));
  e.identities.push_back(equation("d_beta0_eq_dx1dy1_plus_dx2dy2", "d beta0 = dx1 ^ dy1 + dx2 ^ dy2", d_beta,
                                  d_beta_expected));
  e.identities.push_back(equation("d_beta0_wedge_omega0_zero", "d beta0 ^ omega0 = 0", wedge_d(d_beta, omega),
                                  DiffForm(ch.coords(), 4)));
  return e;
}

CatalogEntry contact_entry() {
  Chart ch({"t", "x1", "x2", "y1", "y2"});
  auto [omega, beta] = omega_zero(ch);
  DiffForm eta = ch.d("t");
  DiffForm phi = omega.scaled(ch.x("t"));
  DiffForm gamma = ch.d("t").scaled(ch.x("t", -1)) + beta;
  DiffForm d_gamma = exterior_derivative(gamma);

  CatalogEntry e;
  e.name = "contact_R5";
  e.coords = ch.coords();
  e.forms = {{"eta", eta}, {"Phi", phi}, {"gamma", gamma}};
  e.identities.push_back(equation("d_eta_zero", "d eta = 0", exterior_derivative(eta), DiffForm(ch.coords(), 2)));
  e.identities.push_back(
      equation("d_Phi_eq_gamma_wedge_Phi", "d Phi = gamma ^ Phi", exterior_derivative(phi), wedge_d(gamma, phi)));
  e.identities.push_back(
      nonvanishing("eta_Phi_Phi_volume", "eta ^ Phi ^ Phi != 0", wedge_d(eta, wedge_d(phi, phi))));
  e.identities.push_back(
      nonvanishing("gamma_contact", "gamma ^ d gamma ^ d gamma != 0", wedge_d(gamma, wedge_d(d_gamma, d_gamma))));
  return e;
}

}  // namespace

const DiffForm& CatalogEntry::form(const std::string& key) const {
  for (const auto& [name, f] : forms) {
    if (name == key) return f;
  }
  throw std::out_of_range("catalog entry " + name + " has no form " + key);
}

std::vector<CatalogEntry> example_catalog() { return {omega_f_entry(), contact_entry()}; }

std::pair<DiffForm, DiffForm> conformal_family(const DiffForm& sigma, const Poly& g) {
  if (sigma.degree() != 2) throw DimensionError("conformal_family: sigma must be a 2-form");
  for (const auto& [mask, coeff] : sigma.form().terms()) {
    if (!coeff.is_constant()) throw std::invalid_argument("conformal_family: sigma must have constant coefficients");
  }
  DiffForm omega = sigma.scaled(ScalarExpr::exp(g));
  DiffForm beta = exterior_derivative(DiffForm::function(sigma.coords(), ScalarExpr::from_poly(g)));
  return {omega, beta};
}

}  // namespace exform
