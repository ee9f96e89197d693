#pragma once

#include <utility>
#include <vector>

#include "exform/form.hpp"

namespace exform {

using Term = std::pair<std::vector<int>, Rational>;

/// Canonical form from (indices, coefficient) terms; duplicates are summed and
/// zeros dropped. Throws DimensionError on a bad index list, degree mismatch,
/// or a nonzero form of degree > dim.
ExtForm make_form(int dim, int degree, const std::vector<Term>& terms);

/// Standard basis vector e_i (1-based).
Vector basis_vector(int dim, int index);

/// theta(x_1, ..., x_k) with the normalization
/// (eta_1 ^ ... ^ eta_k)(x_1, ..., x_k) = det[eta_i(x_j)] / k!.
Rational evaluate(const ExtForm& theta, const std::vector<Vector>& args);

/// <[x_1 ... x_k], theta> = iota_{[x_1 ... x_k]} theta read as a scalar.
Rational pairing(const std::vector<Vector>& vs, const ExtForm& theta);

/// (-1)^(k(k-1)/2): sign of the order reversal of k items.
int reverse_sign(int k);

/// Returns nu with iota_x nu = mu, built as a ^ mu for a covector a with a(x) = 1.
/// Requires x != 0 and iota_x mu = 0.
ExtForm interior_division(const Vector& x, const ExtForm& mu);

/// Covector with the given standard components, as a 1-form.
ExtForm covector_form(const Vector& components);

/// Value of a 1-form on a vector.
Rational apply_covector(const ExtForm& covector, const Vector& v);

FloatForm to_float(const ExtForm& form);

}  // namespace exform
