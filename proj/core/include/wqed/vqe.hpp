#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>

#include "wqed/circuit.hpp"
#include "wqed/pauli.hpp"
#include "wqed/records.hpp"

namespace wqed {

struct OptimizerConfig {
  double learning_rate = 0.005;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  int max_iters = 1000;
  double cost_tol = 1e-10;  // stop when |C_k - C_{k-1}| drops below this
  double grad_step = 1e-5;  // central-difference half-width
};

// Interpolation schedule of the adiabatically-assisted outer loop.
// delta_s <= 0 selects the default step 1/(5 n_qubits).
struct Schedule {
  double s_start = 0.1;
  double s_end = 1.0;
  double delta_s = 0.0;
};

/// <psi(params)|h|psi(params)> on the circuit's declared initial state.
double cost(const Circuit& circuit, const Eigen::VectorXd& params, const PauliOperator& h,
            const ExpmOptions& expm = {});

using CostFn = std::function<double(const Eigen::VectorXd&)>;
using GradFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// Central finite differences, (C(p + step e_k) - C(p - step e_k)) / (2 step),
/// over an arbitrary cost. Frozen slots get a zero entry so optimizers leave
/// them untouched.
Eigen::VectorXd finite_difference_gradient(const Circuit& circuit, const CostFn& cost_fn,
                                           const Eigen::VectorXd& params, double step);

/// The above specialized to the noiseless energy cost.
Eigen::VectorXd gradient(const Circuit& circuit, const Eigen::VectorXd& params,
                         const PauliOperator& h, double step, const ExpmOptions& expm = {});

struct AdamResult {
  Eigen::VectorXd params;  // best seen, not necessarily the last iterate
  double energy = 0.0;
  int iters = 0;
};

/// Adam over an arbitrary cost; terminates on cost_tol or max_iters and
/// returns the best point seen. A non-finite cost raises OptimizationError
/// carrying the iteration index.
AdamResult adam_minimize_fn(const CostFn& cost_fn, const GradFn& grad_fn,
                            Eigen::VectorXd init, const OptimizerConfig& cfg);

AdamResult adam_minimize(const Circuit& circuit, const PauliOperator& h,
                         const Eigen::VectorXd& init, const OptimizerConfig& cfg,
                         const ExpmOptions& expm = {});

/// Seeded starting point: 0.01 * uniform[0, 2 pi) per free slot, constants
/// (range slots included) at their declared values, grouped slots scaled off
/// one shared draw per group.
Eigen::VectorXd draw_initial_params(const Circuit& circuit, std::uint64_t seed);

/// Adiabatically-assisted VQE: minimizes (1-s) h0 + s htarget over the
/// schedule, warm-starting each step from the previous optimum. model is
/// recorded for provenance only. A failed step flags the record and stops
/// the sweep.
RunRecord aavqe(const ModelSpec& model, const PauliOperator& h0, const PauliOperator& htarget,
                const Circuit& circuit, const Schedule& schedule, const OptimizerConfig& cfg,
                std::uint64_t seed, const ExpmOptions& expm = {});

}  // namespace wqed
