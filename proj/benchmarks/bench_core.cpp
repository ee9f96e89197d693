#include <benchmark/benchmark.h>

#include "exform/catalog.hpp"
#include "exform/diff_forms.hpp"
#include "exform/form_dsl.hpp"
#include "exform/wedge_solver.hpp"

namespace {

using namespace exform;

void BM_WedgeStandardForms(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ExtForm omega = standard_form(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(wedge(omega, omega));
}
BENCHMARK(BM_WedgeStandardForms)->DenseRange(4, 12, 2);

void BM_Rank2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CounterRng rng(1);
  const ExtForm omega = random_form_of_rank(n, n / 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank2(omega));
}
BENCHMARK(BM_Rank2)->DenseRange(4, 12, 2);

void BM_SolveWedge(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  CounterRng rng(2);
  const ExtForm omega = random_form_of_rank(n, n / 2, rng);
  ExtForm kappa(n, k + 2);
  for (auto mask : lex_subsets(n, k + 2)) kappa.add_term(mask, rng.rational(5, 3));
  for (auto _ : state) benchmark::DoNotOptimize(solve_wedge(omega, kappa));
}
BENCHMARK(BM_SolveWedge)->Args({4, 1})->Args({6, 2})->Args({8, 3})->Unit(benchmark::kMillisecond);

void BM_KernelMainProfile(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CounterRng rng(3);
  const ExtForm omega = random_form_of_rank(n, 2, rng);
  for (auto _ : state) {
    CounterRng local(4);
    benchmark::DoNotOptimize(kernel_main_profile(omega, 3, local));
  }
}
BENCHMARK(BM_KernelMainProfile)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_ExteriorDerivativeOmegaZero(benchmark::State& state) {
  const DiffForm omega = example_catalog().front().form("omega0");
  for (auto _ : state) benchmark::DoNotOptimize(exterior_derivative(omega));
}
BENCHMARK(BM_ExteriorDerivativeOmegaZero);

void BM_LeeSolveGrid(benchmark::State& state) {
  const DiffForm omega = example_catalog().front().form("omega0");
  const auto grid = make_grid(default_axes({&omega}));
  for (auto _ : state) benchmark::DoNotOptimize(lee_solve(omega, grid));
}
BENCHMARK(BM_LeeSolveGrid)->Unit(benchmark::kMillisecond);

void BM_ParsePrint(benchmark::State& state) {
  const std::vector<std::string> coords{"t", "x1", "x2", "y1", "y2"};
  const std::string body = "t*exp(x1*y1 + x2*y2)*dx1/\\dx2 + t*dy1/\\dy2 + t^-1*x1*dt/\\dy1";
  for (auto _ : state) benchmark::DoNotOptimize(print_form(parse_form({coords, body, {}})));
}
BENCHMARK(BM_ParsePrint);

}  // namespace

// The packaged benchmark_main archive is LTO bytecode from another compiler build.
BENCHMARK_MAIN();
