#include <benchmark/benchmark.h>

#include <random>

#include "su2ca/cohomology.hpp"
#include "su2ca/fourier.hpp"
#include "su2ca/io.hpp"

using namespace su2ca;

namespace {

FourierSeries make_series(int two_l_max, bool zero_top) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FourierSeries f;
  for (int two_l = 0; two_l <= two_l_max; ++two_l) {
    const RepLevel level = RepLevel::from_doubled(two_l);
    Eigen::MatrixXcd b(level.dim(), level.dim());
    for (int mi = 0; mi < level.dim(); ++mi)
      for (int ni = 0; ni < level.dim(); ++ni) b(mi, ni) = Complex{u(rng), u(rng)};
    if (zero_top) b.col(level.dim() - 1).setZero();
    f.set_block(level, std::move(b));
  }
  return f;
}

void BM_LadderSymbol(benchmark::State& state) {
  const RepLevel level = RepLevel::from_doubled(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ladder_symbol(FrameField::Lower, level));
    benchmark::DoNotOptimize(ladder_symbol(FrameField::Y2, level));
  }
}
BENCHMARK(BM_LadderSymbol)->Arg(8)->Arg(40);

void BM_RepMatrix(benchmark::State& state) {
  const RepLevel level = RepLevel::from_doubled(static_cast<int>(state.range(0)));
  const GroupPoint x{{0.5, 0.5}, {0.5, 0.5}};
  for (auto _ : state) benchmark::DoNotOptimize(rep_matrix(level, x));
}
BENCHMARK(BM_RepMatrix)->Arg(2)->Arg(8);

void BM_StageRank(benchmark::State& state) {
  const auto p1 = std::get<Corank1Preset>(preset("corank1-paper"));
  const RepLevel level = RepLevel::from_doubled(static_cast<int>(state.range(0)));
  const DPrimeOperator op = dprime_expression(p1.frame, p1.recomputed, 0, 1);
  for (auto _ : state) {
    const Eigen::MatrixXcd b = block_matrix(op, level);
    benchmark::DoNotOptimize(matrix_rank(b));
  }
}
BENCHMARK(BM_StageRank)->Arg(8)->Arg(40);

void BM_SolveLowering(benchmark::State& state) {
  const FourierSeries f = make_series(static_cast<int>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(solve_lowering(f));
}
BENCHMARK(BM_SolveLowering)->Arg(8)->Arg(20);

void BM_CohomologyReport(benchmark::State& state) {
  const auto p1 = std::get<Corank1Preset>(preset("corank1-paper"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cohomology_report(p1.frame, p1.recomputed, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_CohomologyReport)->Arg(6)->Arg(12);

void BM_AnalyzePoly(benchmark::State& state) {
  ZPolynomial p;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(0, 2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 12; ++k)
    p = p + ZPolynomial::monomial(e(rng), e(rng), e(rng), e(rng), {u(rng), u(rng)});
  for (auto _ : state) benchmark::DoNotOptimize(analyze_poly(p));
}
BENCHMARK(BM_AnalyzePoly);

}  // namespace

BENCHMARK_MAIN();
