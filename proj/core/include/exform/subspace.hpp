#pragma once

#include <utility>
#include <vector>

#include "exform/exterior.hpp"
#include "exform/linalg.hpp"

namespace exform {

/// Linear subspace C of an n-dimensional space, given by an independent basis.
class Subspace {
 public:
  Subspace() = default;
  /// Throws std::invalid_argument when the basis is dependent or has the wrong length.
  Subspace(int ambient_dim, std::vector<Vector> basis);

  static Subspace zero(int ambient_dim) { return Subspace(ambient_dim, {}); }

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool contains(const Vector& v) const;

 private:
  int ambient_dim_ = 0;
  std::vector<Vector> basis_;
};

/// Basis of the annihilator C^0 = {a : a(x) = 0 for x in C}, one covector per
/// free column of the basis matrix. For C = {0} this is the standard dual basis.
std::vector<Vector> annihilator(const Subspace& c);

/// Ordered basis (e_1..e_p spanning C, then a completion) together with its dual
/// base. Covectors are stored with the C^0 block first:
///   covectors()[0..k)   annihilate C and are dual to vectors()[p..n)
///   covectors()[k..n)   are dual to vectors()[0..p)
/// where p = dim C and k = n - p.
class AdaptedFrame {
 public:
  /// `vectors` must form a basis of the ambient space whose first `subspace_dim`
  /// entries span C. Throws std::invalid_argument on a singular frame.
  AdaptedFrame(std::vector<Vector> vectors, int subspace_dim);

  int ambient_dim() const { return static_cast<int>(vectors_.size()); }
  int subspace_dim() const { return subspace_dim_; }
  int annihilator_dim() const { return ambient_dim() - subspace_dim_; }

  const std::vector<Vector>& vectors() const { return vectors_; }
  const std::vector<Vector>& covectors() const { return covectors_; }

  /// Vector dual to covectors()[i].
  const Vector& dual_vector(int i) const;

  /// Rewrites a standard-coordinate form in the frame's covector basis
  /// (index i+1 <-> covectors()[i]).
  ExtForm to_frame(const ExtForm& form) const;
  /// Inverse of to_frame.
  ExtForm from_frame(const ExtForm& framed) const;

 private:
  std::vector<Vector> vectors_;
  int subspace_dim_ = 0;
  std::vector<Vector> covectors_;
};

/// Deterministic frame: the basis of C, then standard vectors e_i (increasing i)
/// that enlarge the span.
AdaptedFrame adapted_cobase(const Subspace& c);

/// Expresses `form` (alpha_i in standard coordinates) through a new covector basis
/// gamma, given alpha_i = sum_j substitution[i][j] gamma_j.
ExtForm change_basis(const ExtForm& form, const std::vector<std::vector<Rational>>& substitution);

struct DecompositionPart {
  int s = 0;             // number of C^0-block factors in every term
  ExtForm framed;        // part written in frame covectors
  ExtForm form;          // same part in standard coordinates
};

struct Decomposition {
  AdaptedFrame frame;
  std::vector<DecompositionPart> parts;  // strictly increasing s
  int main_degree() const { return parts.front().s; }
  const DecompositionPart& main_part() const { return parts.front(); }
};

/// Groups the terms of omega (rewritten in the frame) by their count of C^0
/// factors. Throws std::invalid_argument for the zero form.
Decomposition decompose(const ExtForm& omega, const AdaptedFrame& frame);

/// (omega*, |omega*|) with respect to the canonical frame of C.
std::pair<ExtForm, int> main_part(const ExtForm& omega, const Subspace& c);

/// |omega*| computed without a frame: deg omega minus the largest j for which
/// some j-subset of C's basis contracts omega to a nonzero form.
int main_degree(const ExtForm& omega, const Subspace& c);

/// True when omega lies in the subalgebra generated by C^0, i.e. every C vector
/// contracts it to zero.
bool in_annihilator_algebra(const ExtForm& omega, const Subspace& c);

struct Derivative {
  std::vector<Vector> vectors;  // v_1..v_j drawn from C's basis
  ExtForm result;               // iota_{[v_1 ... v_j]} omega
};

/// Finds v_1..v_j in C (j = deg omega - |omega*|) with a nonzero contraction in
/// Lambda^{|omega*|}(C^0). Subsets of C's basis are searched in lexicographic order.
Derivative extract_derivative(const ExtForm& omega, const Subspace& c);

}  // namespace exform
