// Hot-path kernels: local gate application and the Krylov propagator that
// together dominate every cost evaluation.
#include <benchmark/benchmark.h>

#include <Eigen/Dense>
#include <complex>
#include <random>

#include "wqed/gates.hpp"
#include "wqed/hamiltonians.hpp"
#include "wqed/krylov.hpp"
#include "wqed/state.hpp"

namespace {

wqed::StateVector random_state(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  wqed::StateVector psi(n);
  for (std::int64_t b = 0; b < psi.dim(); ++b) psi.amps[b] = {g(rng), g(rng)};
  psi.amps /= psi.amps.norm();
  return psi;
}

void BM_single_qubit_gate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  wqed::StateVector psi = random_state(n, 1);
  const Eigen::Matrix2cd u = wqed::rot_x(0.3);
  int q = 0;
  for (auto _ : state) {
    wqed::apply_single_qubit(psi, q, u);
    q = (q + 1) % n;
    benchmark::DoNotOptimize(psi.amps.data());
  }
  state.SetItemsProcessed(state.iterations() * psi.dim());
}

void BM_two_qubit_gate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  wqed::StateVector psi = random_state(n, 2);
  const Eigen::Matrix4cd u = wqed::pair_xx(0.7);
  int q = 0;
  for (auto _ : state) {
    wqed::apply_two_qubit(psi, q, q + 1, u);
    q = (q + 1) % (n - 1);
    benchmark::DoNotOptimize(psi.amps.data());
  }
  state.SetItemsProcessed(state.iterations() * psi.dim());
}

// One full-chain exchange propagator step, the expensive gate of the
// XX-variant ansatz.
void BM_expm_apply_exchange(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const wqed::PauliOperator h = wqed::build_wqed_xx(n, 1.0, 2.0);
  const wqed::StateVector psi0 = random_state(n, 3);
  for (auto _ : state) {
    wqed::StateVector psi = psi0;
    wqed::expm_apply(h, psi, 0.4);
    benchmark::DoNotOptimize(psi.amps.data());
  }
}

// The factorized Ising propagator by contrast costs one diagonal sweep plus
// a pair of basis changes.
void BM_expm_apply_ising(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const wqed::PauliOperator h = wqed::build_wqed_ising(n, 1.0, 2.0);
  const wqed::StateVector psi0 = random_state(n, 4);
  for (auto _ : state) {
    wqed::StateVector psi = psi0;
    wqed::expm_apply(h, psi, 0.4);
    benchmark::DoNotOptimize(psi.amps.data());
  }
}

}  // namespace

BENCHMARK(BM_single_qubit_gate)->DenseRange(8, 14, 2);
BENCHMARK(BM_two_qubit_gate)->DenseRange(8, 14, 2);
BENCHMARK(BM_expm_apply_exchange)->DenseRange(8, 12, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_expm_apply_ising)->DenseRange(8, 12, 2)->Unit(benchmark::kMicrosecond);
