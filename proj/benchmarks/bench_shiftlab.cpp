#include <benchmark/benchmark.h>

#include "shiftlab/boundary.hpp"
#include "shiftlab/dilation.hpp"
#include "shiftlab/parrott.hpp"
#include "shiftlab/shift.hpp"
#include "shiftlab/vn_check.hpp"

using namespace shiftlab;

static void BM_BuildShift(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto W = random_contractive_family(2, N, 42, WeightProfile::kComplexNonzero);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_shift(W));
  }
  state.SetComplexityN(basis_dimension(2, N + 1));
}
BENCHMARK(BM_BuildShift)->DenseRange(2, 10, 2)->Complexity();

static void BM_EvalAtTuple(benchmark::State& state) {
  const auto T = build_shift(random_contractive_family(3, static_cast<int>(state.range(0)),
                                                       7, WeightProfile::kComplexNonzero));
  const auto p = random_matrix_polynomial(3, 2, 3, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_at_tuple(p, T));
  }
}
BENCHMARK(BM_EvalAtTuple)->DenseRange(1, 4);

static void BM_OpNorm(benchmark::State& state) {
  const auto p = random_matrix_polynomial(2, 2, 3, 5);
  const auto T = build_shift(random_contractive_family(2, static_cast<int>(state.range(0)),
                                                       13, WeightProfile::kComplexNonzero));
  const Eigen::MatrixXcd A = eval_at_tuple(p, T);
  for (auto _ : state) {
    benchmark::DoNotOptimize(op_norm(A));
  }
  state.SetComplexityN(A.rows());
}
BENCHMARK(BM_OpNorm)->DenseRange(2, 10, 2)->Complexity();

static void BM_SupNormTorus(benchmark::State& state) {
  const auto p = parrott_polynomial();
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sup_norm_torus(p, grid, false));
  }
  state.SetComplexityN(static_cast<std::int64_t>(grid) * grid * grid);
}
BENCHMARK(BM_SupNormTorus)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_PushToBoundary(benchmark::State& state) {
  const auto W = random_contractive_family(2, 2, 31, WeightProfile::kComplexNonzero);
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(push_to_boundary(W, std::nullopt, samples));
  }
}
BENCHMARK(BM_PushToBoundary)->RangeMultiplier(4)->Range(16, 256);

static void BM_CyclicDilation(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_cyclic_dilation(2, 2, deg, 10));
  }
}
BENCHMARK(BM_CyclicDilation)->DenseRange(1, 4);

static void BM_RefutationReport(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(parrott_refutation_report(ParrottConfig::signed_config(),
                                                       static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_RefutationReport)->Arg(16)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
