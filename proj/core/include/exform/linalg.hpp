#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "exform/rational.hpp"

namespace exform {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> multiply(const std::vector<Rational>& x) const;
  bool is_zero() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form with its pivot columns (lexicographic pivot order).
struct Echelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Fraction-free (Bareiss) elimination over Z after clearing row denominators,
/// followed by exact back-substitution to reduced form.
Echelon row_reduce(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Null space basis; each vector is scaled to coprime integers with the free
/// variable's entry positive. One vector per non-pivot column, in column order.
std::vector<std::vector<Rational>> null_space(const RationalMatrix& m);

/// Particular solution of m x = b with every free variable set to zero, or
/// nullopt when b is outside the column space.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b);

/// Exact inverse of a square matrix, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Dense real matrix for the floating-point path, row-major.
struct RealMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;
  RealMatrix() = default;
  RealMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Rank decisions use singular values above kRankTolerance * sigma_max.
inline constexpr double kRankTolerance = 1e-10;
/// Relative residual accepted as a solution in floating-point mode.
inline constexpr double kResidualTolerance = 1e-9;

struct RealSolveResult {
  std::size_t rank = 0;
  std::optional<std::vector<double>> particular;
  std::vector<std::vector<double>> kernel;
  double residual = 0.0;  // max-norm of m x - b, relative
};

/// SVD-based least-norm solve with null space.
RealSolveResult solve_real(const RealMatrix& m, const std::vector<double>& b);

}  // namespace exform
