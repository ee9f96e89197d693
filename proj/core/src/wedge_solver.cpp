#include "exform/wedge_solver.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

namespace exform {

namespace {

void require_two_form(const ExtForm& omega, const char* what) {
  if (omega.degree() != 2) throw DimensionError(std::string(what) + ": form must have degree 2");
}

}  // namespace

RationalMatrix skew_matrix(const ExtForm& omega) {
  require_two_form(omega, "skew_matrix");
  const int n = omega.dim();
  RationalMatrix m(n, n);
  for (const auto& [mask, value] : omega.terms()) {
    const int i = std::countr_zero(mask);
    const int j = 63 - std::countl_zero(mask);
    m(i, j) = value;
    m(j, i) = -value;
  }
  return m;
}

int rank2(const ExtForm& omega) {
  require_two_form(omega, "rank2");
  return static_cast<int>(rank(skew_matrix(omega)) / 2);
}

int rank2(const FloatForm& omega) {
  if (omega.degree() != 2) throw DimensionError("rank2: form must have degree 2");
  const int n = omega.dim();
  RealMatrix m(n, n);
  for (const auto& [mask, value] : omega.terms()) {
    const int i = std::countr_zero(mask);
    const int j = 63 - std::countl_zero(mask);
    m(i, j) = value;
    m(j, i) = -value;
  }
  return static_cast<int>(solve_real(m, std::vector<double>(n, 0.0)).rank / 2);
}

Subspace kernel2(const ExtForm& omega) {
  require_two_form(omega, "kernel2");
  return Subspace(omega.dim(), null_space(skew_matrix(omega)));
}

template <class S>
BasicLambdaMatrix<S> build_lambda_matrix(const BasicForm<S>& omega, int k) {
  if (omega.degree() != 2) throw DimensionError("lambda_matrix: form must have degree 2");
  const int n = omega.dim();
  if (k < 0 || k > n) throw std::out_of_range("lambda_matrix: k out of range");
  BasicLambdaMatrix<S> out;
  out.dim = n;
  out.k = k;
  out.row_labels = lex_subsets(n, k + 2);
  out.col_labels = lex_subsets(n, k);
  std::unordered_map<std::uint64_t, std::size_t> row_index;
  for (std::size_t r = 0; r < out.row_labels.size(); ++r) row_index.emplace(out.row_labels[r], r);
  out.entries.assign(out.row_labels.size(), std::vector<S>(out.col_labels.size(), S(0)));
  for (std::size_t c = 0; c < out.col_labels.size(); ++c) {
    const std::uint64_t b = out.col_labels[c];
    for (const auto& [m, value] : omega.terms()) {
      if ((m & b) != 0) continue;
      S v = value;
      if (shuffle_sign(m, b) < 0) v = -v;
      out.entries[row_index.at(m | b)][c] = v;
    }
  }
  return out;
}

template BasicLambdaMatrix<Rational> build_lambda_matrix(const BasicForm<Rational>&, int);
template BasicLambdaMatrix<double> build_lambda_matrix(const BasicForm<double>&, int);

LambdaMatrix lambda_matrix(const ExtForm& omega, int k) { return build_lambda_matrix(omega, k); }

RationalMatrix to_matrix(const LambdaMatrix& lm) {
  RationalMatrix m(lm.row_labels.size(), lm.col_labels.size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = lm.entries[r][c];
  }
  return m;
}

std::vector<Rational> coordinates(const ExtForm& form, const std::vector<std::uint64_t>& labels) {
  std::vector<Rational> out;
  out.reserve(labels.size());
  for (auto label : labels) out.push_back(form.coefficient(label));
  return out;
}

ExtForm from_coordinates(int dim, int degree, const std::vector<std::uint64_t>& labels,
                         const std::vector<Rational>& coords) {
  ExtForm out(dim, degree);
  for (std::size_t i = 0; i < labels.size(); ++i) out.add_term(labels[i], coords[i]);
  return out;
}

WedgeSolution solve_wedge(const ExtForm& omega, const ExtForm& kappa) {
  require_two_form(omega, "solve_wedge");
  if (kappa.degree() < 2) throw DimensionError("solve_wedge: kappa must have degree >= 2");
  if (kappa.dim() != omega.dim()) throw DimensionError("solve_wedge: dimension mismatch");
  const int l = kappa.degree() - 2;
  LambdaMatrix lm = lambda_matrix(omega, l);
  RationalMatrix a = to_matrix(lm);
  WedgeSolution out;
  if (auto x = solve(a, coordinates(kappa, lm.row_labels))) {
    out.particular = from_coordinates(omega.dim(), l, lm.col_labels, *x);
  }
  for (const auto& v : null_space(a)) out.kernel_basis.push_back(from_coordinates(omega.dim(), l, lm.col_labels, v));
  return out;
}

FloatWedgeSolution solve_wedge(const FloatForm& omega, const FloatForm& kappa) {
  if (omega.degree() != 2) throw DimensionError("solve_wedge: form must have degree 2");
  if (kappa.degree() < 2) throw DimensionError("solve_wedge: kappa must have degree >= 2");
  if (kappa.dim() != omega.dim()) throw DimensionError("solve_wedge: dimension mismatch");
  const int n = omega.dim();
  const int l = kappa.degree() - 2;
  auto lm = build_lambda_matrix(omega, l);
  RealMatrix a(lm.row_labels.size(), lm.col_labels.size());
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t c = 0; c < a.cols; ++c) a(r, c) = lm.entries[r][c];
  }
  std::vector<double> b;
  for (auto label : lm.row_labels) b.push_back(kappa.coefficient(label));
  RealSolveResult res = solve_real(a, b);
  auto to_form = [&](const std::vector<double>& x) {
    FloatForm f(n, l);
    for (std::size_t i = 0; i < x.size(); ++i) f.add_term(lm.col_labels[i], x[i]);
    return f;
  };
  FloatWedgeSolution out;
  out.residual = res.residual;
  if (res.particular) out.particular = to_form(*res.particular);
  for (const auto& v : res.kernel) out.kernel_basis.push_back(to_form(v));
  return out;
}

std::vector<ExtForm> lambda_kernel(const ExtForm& omega, int l) {
  LambdaMatrix lm = lambda_matrix(omega, l);
  std::vector<ExtForm> out;
  for (const auto& v : null_space(to_matrix(lm))) out.push_back(from_coordinates(omega.dim(), l, lm.col_labels, v));
  return out;
}

KernelProfile kernel_main_profile(const ExtForm& omega, int l, CounterRng& rng, int combinations) {
  require_two_form(omega, "kernel_main_profile");
  if (omega.is_zero()) throw std::invalid_argument("kernel_main_profile: Omega must be nonzero");
  if (l < 1 || l > omega.dim() - 2) throw std::out_of_range("kernel_main_profile: l out of range");
  KernelProfile profile;
  profile.l = l;
  profile.p = rank2(omega);
  const Subspace c = kernel2(omega);
  const std::vector<ExtForm> basis = lambda_kernel(omega, l);
  profile.kernel_dim = static_cast<int>(basis.size());
  if (basis.empty()) return profile;

  std::vector<ExtForm> samples = basis;
  for (int t = 0; t < combinations; ++t) {
    ExtForm combo(omega.dim(), l);
    for (const auto& b : basis) combo += b.scaled(rng.rational(5, 3));
    if (!combo.is_zero()) samples.push_back(std::move(combo));
  }
  std::map<int, int> histogram;
  for (const auto& beta : samples) {
    const int s = main_degree(beta, c);
    ++histogram[s];
    if (s < profile.p) profile.violations.push_back(beta);
  }
  profile.entries.assign(histogram.begin(), histogram.end());
  profile.min_s = histogram.begin()->first;
  return profile;
}

ExtForm construct_kernel_element(const ExtForm& omega, int l, int s) {
  require_two_form(omega, "construct_kernel_element");
  if (omega.is_zero()) throw std::invalid_argument("construct_kernel_element: Omega must be nonzero");
  const int n = omega.dim();
  if (l < 0 || l > n) throw std::out_of_range("construct_kernel_element: l out of range");
  const int p = rank2(omega);
  if (s < p || s > std::min(2 * p, l)) {
    throw std::invalid_argument("construct_kernel_element: s must lie in [p, min(2p, l)]");
  }
  if (l - s > n - 2 * p) {
    throw std::invalid_argument("construct_kernel_element: l - s exceeds the available complement covectors");
  }
  const Subspace c = kernel2(omega);
  const AdaptedFrame frame = adapted_cobase(c);
  const int k = frame.annihilator_dim();  // == 2p

  // Omega lies in Lambda(C^0): restrict it to the first k frame covectors.
  const ExtForm framed = frame.to_frame(omega);
  ExtForm restricted(k, 2);
  for (const auto& [mask, value] : framed.terms()) {
    if ((mask >> k) != 0) throw std::logic_error("construct_kernel_element: Omega is not in Lambda(C^0)");
    restricted.add_term(mask, value);
  }
  const std::vector<ExtForm> inner = lambda_kernel(restricted, s);
  if (inner.empty()) throw std::logic_error("construct_kernel_element: empty kernel on Lambda^s(C^0)");

  ExtForm lifted(n, s);
  for (const auto& [mask, value] : inner.front().terms()) lifted.add_term(mask, value);
  std::uint64_t tau_mask = 0;
  for (int i = 0; i < l - s; ++i) tau_mask |= std::uint64_t{1} << (k + i);
  ExtForm tau(n, l - s);
  tau.add_term(tau_mask, Rational(1));
  const ExtForm beta = frame.from_frame(wedge(tau, lifted));

  if (beta.is_zero() || !wedge(omega, beta).is_zero() || main_degree(beta, c) != s) {
    throw std::logic_error("construct_kernel_element: constructed element failed validation");
  }
  return beta;
}

std::vector<ExtForm> rank2_pair_kernel(const ExtForm& omega1) {
  require_two_form(omega1, "rank2_pair_kernel");
  if (omega1.is_zero()) throw std::invalid_argument("rank2_pair_kernel: omega1 must be nonzero");
  return lambda_kernel(omega1, 2);
}

bool LambdaReport::injective_below_rank() const {
  for (const auto& row : rows) {
    if (row.k <= p - 1 && !row.injective()) return false;
  }
  return true;
}

LambdaReport lambda_report(const ExtForm& omega) {
  require_two_form(omega, "lambda_report");
  if (omega.is_zero()) throw std::invalid_argument("lambda_report: Omega must be nonzero");
  LambdaReport report;
  report.dim = omega.dim();
  report.p = rank2(omega);
  for (int k = 0; k <= omega.dim() - 2; ++k) {
    LambdaMatrix lm = lambda_matrix(omega, k);
    LambdaRow row;
    row.k = k;
    row.source_dim = static_cast<long long>(lm.col_labels.size());
    row.target_dim = static_cast<long long>(lm.row_labels.size());
    row.rank = static_cast<long long>(rank(to_matrix(lm)));
    row.kernel_dim = row.source_dim - row.rank;
    row.cokernel_dim = row.target_dim - row.rank;
    report.rows.push_back(row);
  }
  return report;
}

ExtForm standard_form(int n, int p) {
  if (2 * p > n) throw std::invalid_argument("standard_form: 2p exceeds n");
  ExtForm out(n, 2);
  for (int i = 0; i < p; ++i) out.add_term((std::uint64_t{3}) << (2 * i), Rational(1));
  return out;
}

std::vector<std::vector<Rational>> random_invertible(int n, CounterRng& rng) {
  while (true) {
    RationalMatrix m(n, n);
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        rows[i][j] = static_cast<long>(rng.uniform(-2, 2));
        m(i, j) = rows[i][j];
      }
    }
    if (rank(m) == static_cast<std::size_t>(n)) return rows;
  }
}

ExtForm random_form_of_rank(int n, int p, CounterRng& rng) {
  return change_basis(standard_form(n, p), random_invertible(n, rng));
}

ExtForm random_form(int n, int degree, CounterRng& rng, double density) {
  ExtForm out(n, degree);
  const auto threshold = static_cast<std::uint64_t>(density * 1000.0);
  for (auto mask : lex_subsets(n, degree)) {
    if (rng.next() % 1000 < threshold) out.add_term(mask, rng.rational(4, 3));
  }
  return out;
}

}  // namespace exform
