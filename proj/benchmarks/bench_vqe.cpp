// Cost and gradient evaluation for the ansatz families the optimizer loops
// over; these set the wall-clock budget of a full experiment sweep.
#include <benchmark/benchmark.h>

#include "wqed/ansatz.hpp"
#include "wqed/hamiltonians.hpp"
#include "wqed/vqe.hpp"

namespace {

void BM_cost(benchmark::State& state, const char* ansatz_id) {
  const int n = static_cast<int>(state.range(0));
  const int depth = static_cast<int>(state.range(1));
  wqed::AnsatzOptions opts;
  opts.n_exp = 2;
  const wqed::Circuit c = wqed::build_ansatz(ansatz_id, n, depth, opts);
  const wqed::PauliOperator h = wqed::build_tfim(n, 1.0);
  const Eigen::VectorXd p = wqed::draw_initial_params(c, 11);
  for (auto _ : state) benchmark::DoNotOptimize(wqed::cost(c, p, h));
}

void BM_gradient(benchmark::State& state, const char* ansatz_id) {
  const int n = static_cast<int>(state.range(0));
  const int depth = static_cast<int>(state.range(1));
  const wqed::Circuit c = wqed::build_ansatz(ansatz_id, n, depth, {});
  const wqed::PauliOperator h = wqed::build_tfim(n, 1.0);
  const Eigen::VectorXd p = wqed::draw_initial_params(c, 13);
  for (auto _ : state) {
    const Eigen::VectorXd g = wqed::gradient(c, p, h, 1e-5);
    benchmark::DoNotOptimize(g.data());
  }
}

void BM_cost_wqed_i(benchmark::State& s) { BM_cost(s, "wqed-i"); }
void BM_cost_wqed_xx(benchmark::State& s) { BM_cost(s, "wqed-xx"); }
void BM_cost_hea(benchmark::State& s) { BM_cost(s, "hea"); }
void BM_cost_powerlaw(benchmark::State& s) { BM_cost(s, "wqed-powerlaw"); }
void BM_gradient_wqed_i(benchmark::State& s) { BM_gradient(s, "wqed-i"); }
void BM_gradient_hea(benchmark::State& s) { BM_gradient(s, "hea"); }

}  // namespace

BENCHMARK(BM_cost_wqed_i)->Args({8, 4})->Args({10, 4})->Args({12, 4})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_cost_wqed_xx)->Args({8, 4})->Args({10, 4})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_cost_hea)->Args({8, 4})->Args({10, 4})->Args({12, 4})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_cost_powerlaw)->Args({8, 4})->Args({10, 4})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_gradient_wqed_i)->Args({8, 4})->Args({10, 4})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_gradient_hea)->Args({8, 4})->Args({10, 4})->Unit(benchmark::kMicrosecond);
