#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "exform/linalg.hpp"
#include "exform/random.hpp"
#include "exform/subspace.hpp"

namespace exform {

/// Rank p of a 2-form: the largest p with Omega^p != 0. Computed as half the
/// rank of the skew coefficient matrix.
int rank2(const ExtForm& omega);

/// Same quantity computed literally from exterior powers; works over any ring
/// with exact zero test.
template <class S>
int rank2_by_powers(const BasicForm<S>& omega, const S& one) {
  if (omega.degree() != 2) throw DimensionError("rank2: form must have degree 2");
  int p = 0;
  BasicForm<S> power = BasicForm<S>::constant(omega.dim(), one);
  while (2 * (p + 1) <= omega.dim()) {
    power = wedge(power, omega);
    if (power.is_zero()) break;
    ++p;
  }
  return p;
}

/// Floating-point rank of a 2-form (SVD of the skew matrix, relative tolerance).
int rank2(const FloatForm& omega);

/// Skew matrix M with M(i,j) = coefficient of alpha_i ^ alpha_j for i < j.
RationalMatrix skew_matrix(const ExtForm& omega);

/// C = {x : iota_x Omega = 0}.
Subspace kernel2(const ExtForm& omega);

/// Matrix of lambda^k : beta -> Omega ^ beta from Lambda^k to Lambda^{k+2},
/// rows and columns indexed by k+2 and k multi-indices in lexicographic order.
template <class S>
struct BasicLambdaMatrix {
  int dim = 0;
  int k = 0;
  std::vector<std::uint64_t> row_labels;
  std::vector<std::uint64_t> col_labels;
  std::vector<std::vector<S>> entries;  // [row][col]
};

using LambdaMatrix = BasicLambdaMatrix<Rational>;

template <class S>
BasicLambdaMatrix<S> build_lambda_matrix(const BasicForm<S>& omega, int k);

LambdaMatrix lambda_matrix(const ExtForm& omega, int k);
RationalMatrix to_matrix(const LambdaMatrix& lm);

/// Coordinates of a form in the lexicographic basis of its degree.
std::vector<Rational> coordinates(const ExtForm& form, const std::vector<std::uint64_t>& labels);
ExtForm from_coordinates(int dim, int degree, const std::vector<std::uint64_t>& labels,
                         const std::vector<Rational>& coords);

struct WedgeSolution {
  std::optional<ExtForm> particular;
  std::vector<ExtForm> kernel_basis;
  bool unique() const { return particular.has_value() && kernel_basis.empty(); }
};

/// Solves Omega ^ beta = kappa for beta of degree deg(kappa) - 2. The particular
/// solution sets every free coordinate to zero.
WedgeSolution solve_wedge(const ExtForm& omega, const ExtForm& kappa);

struct FloatWedgeSolution {
  std::optional<FloatForm> particular;
  std::vector<FloatForm> kernel_basis;
  double residual = 0.0;
  bool unique() const { return particular.has_value() && kernel_basis.empty(); }
};

/// Floating-point variant used for pointwise evaluations of differential forms.
FloatWedgeSolution solve_wedge(const FloatForm& omega, const FloatForm& kappa);

/// Kernel basis of lambda^l as forms.
std::vector<ExtForm> lambda_kernel(const ExtForm& omega, int l);

struct KernelProfile {
  int l = 0;
  int p = 0;
  int kernel_dim = 0;
  std::vector<std::pair<int, int>> entries;  // (main degree s, number of sampled elements with that s)
  std::optional<int> min_s;                  // empty when the kernel is trivial
  std::vector<ExtForm> violations;           // sampled elements with main degree < p
  bool satisfies_lower_bound() const { return violations.empty(); }
};

/// Main-part degrees (relative to C = ker Omega) of ker lambda^l: every basis
/// element plus `combinations` random rational combinations of the basis.
KernelProfile kernel_main_profile(const ExtForm& omega, int l, CounterRng& rng, int combinations = 20);

/// beta != 0 with Omega ^ beta = 0 and |beta*| = s, built as tau ^ beta' with
/// beta' in Lambda^s(C^0) and tau a wedge of l - s complement covectors.
ExtForm construct_kernel_element(const ExtForm& omega, int l, int s);

/// Basis of {omega2 in Lambda^2 : omega1 ^ omega2 = 0}.
std::vector<ExtForm> rank2_pair_kernel(const ExtForm& omega1);

struct LambdaRow {
  int k = 0;
  long long source_dim = 0;
  long long target_dim = 0;
  long long rank = 0;
  long long kernel_dim = 0;
  long long cokernel_dim = 0;
  bool injective() const { return kernel_dim == 0; }
  bool surjective() const { return cokernel_dim == 0; }
};

struct LambdaReport {
  int dim = 0;
  int p = 0;
  std::vector<LambdaRow> rows;  // k = 0 .. n-2
  /// lambda^k injective for every k <= p - 1.
  bool injective_below_rank() const;
};

LambdaReport lambda_report(const ExtForm& omega);

/// The standard rank-p form alpha_1^alpha_2 + ... + alpha_{2p-1}^alpha_{2p} on R^n.
ExtForm standard_form(int n, int p);

/// A^T S A for S = standard_form(n, p) and a random invertible integer matrix A.
ExtForm random_form_of_rank(int n, int p, CounterRng& rng);

/// Random invertible matrix with small integer entries.
std::vector<std::vector<Rational>> random_invertible(int n, CounterRng& rng);

/// Random sparse form with small rational coefficients.
ExtForm random_form(int n, int degree, CounterRng& rng, double density = 0.5);

}  // namespace exform
