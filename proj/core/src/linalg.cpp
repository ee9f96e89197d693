#include "exform/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace exform {

std::vector<Rational> RationalMatrix::multiply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (sgn(a) != 0 && sgn(x[c]) != 0) acc += a * x[c];
    }
    out[r] = acc;
  }
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& a) { return sgn(a) == 0; });
}

Echelon row_reduce(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  // Clear denominators row by row.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class scale = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      const mpz_class& den = m(r, c).get_den();
      if (den != 1) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (scale / m(r, c).get_den());
  }

  std::vector<std::size_t> pivots;
  mpz_class previous = 1;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != row) std::swap(a[p], a[row]);
    const mpz_class pivot = a[row][c];
    for (std::size_t r = row + 1; r < rows; ++r) {
      const mpz_class lead = a[r][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = pivot * a[r][j] - lead * a[row][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        a[r][j] = std::move(v);
      }
      a[r][c] = 0;
    }
    previous = pivot;
    pivots.push_back(c);
    ++row;
  }

  Echelon out{RationalMatrix(pivots.size(), cols), pivots};
  RationalMatrix& red = out.reduced;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const mpz_class& lead = a[r][pivots[r]];
    for (std::size_t c = pivots[r]; c < cols; ++c) {
      if (a[r][c] != 0) {
        red(r, c) = Rational(a[r][c], lead);
        red(r, c).canonicalize();
      }
    }
  }
  for (std::size_t r = pivots.size(); r-- > 0;) {
    for (std::size_t above = 0; above < r; ++above) {
      Rational f = red(above, pivots[r]);
      if (sgn(f) == 0) continue;
      for (std::size_t c = pivots[r]; c < cols; ++c) {
        if (sgn(red(r, c)) != 0) red(above, c) -= f * red(r, c);
      }
    }
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).rank(); }

namespace {

void make_primitive(std::vector<Rational>& v) {
  mpz_class den_lcm = 1;
  for (const auto& x : v) {
    if (x.get_den() != 1) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  }
  mpz_class num_gcd = 0;
  for (auto& x : v) {
    x *= den_lcm;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
  }
  if (num_gcd > 1) {
    for (auto& x : v) x /= num_gcd;
  }
}

}  // namespace

std::vector<std::vector<Rational>> null_space(const RationalMatrix& m) {
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    make_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side size mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  Echelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  std::vector<Rational> x(m.cols(), Rational(0));
  for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = row_reduce(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  }
  return inv;
}

RealSolveResult solve_real(const RealMatrix& m, const std::vector<double>& b) {
  if (b.size() != m.rows) throw std::invalid_argument("solve_real: right-hand side size mismatch");
  RealSolveResult out;
  if (m.cols == 0) {
    out.particular = std::vector<double>{};
    double bmax = 0.0;
    for (double v : b) bmax = std::max(bmax, std::abs(v));
    if (bmax > 0.0) out.particular.reset();
    out.residual = bmax;
    return out;
  }
  Eigen::MatrixXd a(static_cast<Eigen::Index>(m.rows), static_cast<Eigen::Index>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) a(r, c) = m(r, c);
  }
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(m.rows));
  for (std::size_t r = 0; r < m.rows; ++r) rhs(r) = b[r];

  Eigen::VectorXd x = Eigen::VectorXd::Zero(a.cols());
  Eigen::MatrixXd v;
  if (m.rows > 0) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sigma = svd.singularValues();
    const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
      if (sigma(i) > kRankTolerance * sigma_max && sigma(i) > 0.0) ++r;
    }
    out.rank = r;
    v = svd.matrixV();
    const Eigen::MatrixXd& u = svd.matrixU();
    for (std::size_t i = 0; i < r; ++i) {
      x += v.col(i) * (u.col(i).dot(rhs) / sigma(i));
    }
  } else {
    v = Eigen::MatrixXd::Identity(a.cols(), a.cols());
  }
  for (Eigen::Index i = static_cast<Eigen::Index>(out.rank); i < a.cols(); ++i) {
    std::vector<double> k(v.rows());
    for (Eigen::Index j = 0; j < v.rows(); ++j) k[j] = v(j, i);
    out.kernel.push_back(std::move(k));
  }

  const double scale = std::max(rhs.lpNorm<Eigen::Infinity>(),
                                (m.rows > 0 ? a.cwiseAbs().maxCoeff() : 0.0) * x.lpNorm<Eigen::Infinity>());
  const double abs_residual = m.rows > 0 ? (a * x - rhs).lpNorm<Eigen::Infinity>() : 0.0;
  out.residual = scale > 0.0 ? abs_residual / scale : abs_residual;
  if (out.residual <= kResidualTolerance) {
    out.particular = std::vector<double>(x.data(), x.data() + x.size());
  }
  return out;
}

}  // namespace exform
