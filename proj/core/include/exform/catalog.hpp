#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exform/diff_forms.hpp"

namespace exform {

struct IdentityCheck {
  std::string name;
  std::string statement;
  bool holds = false;
  /// Residual for an equation, or the nonzero form for a non-vanishing claim.
  std::optional<DiffForm> witness;
};

struct CatalogEntry {
  std::string name;
  std::vector<std::string> coords;
  std::vector<std::pair<std::string, DiffForm>> forms;
  std::vector<IdentityCheck> identities;

  const DiffForm& form(const std::string& key) const;
};

/// Built-in worked examples with their machine-checked identities:
///   "omega_f"    omega_0 = e^{x1 y1 + x2 y2} dx1^dx2 + dy1^dy2 on R^4 with
///                beta_0 = x1 dy1 + x2 dy2
///   "contact_R5" eta = dt, Phi = t omega_0 and gamma = t^-1 dt + beta_0 on t > 0
std::vector<CatalogEntry> example_catalog();

/// Builds omega = e^g sigma and beta = dg, which satisfy d omega = beta ^ omega
/// with closed beta. `sigma` must have constant coefficients.
std::pair<DiffForm, DiffForm> conformal_family(const DiffForm& sigma, const Poly& g);

}  // namespace exform
