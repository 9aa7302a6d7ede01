// Exact-diagonalization reference paths: these bound the model sizes the
// toolkit can certify against.
#include <benchmark/benchmark.h>

#include "wqed/hamiltonians.hpp"
#include "wqed/spectral.hpp"

namespace {

void BM_ground_dense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const wqed::PauliOperator h = wqed::build_tfim(n, 1.0);
  for (auto _ : state) {
    const wqed::Spectrum s = wqed::ground_space(h, 1, wqed::EigMethod::DENSE);
    benchmark::DoNotOptimize(s.eigenvalues.data());
  }
}

void BM_ground_lanczos(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const wqed::PauliOperator h = wqed::build_tfim(n, 1.0);
  for (auto _ : state) {
    const wqed::Spectrum s =
        wqed::ground_space(h, 1, wqed::EigMethod::LANCZOS, /*want_vectors=*/false);
    benchmark::DoNotOptimize(s.eigenvalues.data());
  }
}

void BM_matvec(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const wqed::PauliOperator h = wqed::build_xxz(n, 1.0, wqed::Boundary::PERIODIC);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Random(std::int64_t{1} << n);
  psi /= psi.norm();
  for (auto _ : state) {
    psi = h.apply(psi);
    psi /= psi.norm();
    benchmark::DoNotOptimize(psi.data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

}  // namespace

BENCHMARK(BM_ground_dense)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ground_lanczos)->DenseRange(10, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matvec)->DenseRange(10, 16, 2)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
