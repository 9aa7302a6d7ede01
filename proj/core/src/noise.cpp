#include "wqed/noise.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "wqed/gates.hpp"
#include "wqed/krylov.hpp"

namespace wqed {

NoiseModel noise_preset(const std::string& name) {
  if (name == "low") return {1e-5, 5e-4};
  if (name == "high") return {1e-4, 5e-3};
  throw std::invalid_argument("unknown noise preset: " + name);
}

std::array<Eigen::Matrix2cd, 2> damping_kraus(double p) {
  if (p < 0 || p > 1) throw std::invalid_argument("damping_kraus: p outside [0, 1]");
  Eigen::Matrix2cd k0 = Eigen::Matrix2cd::Zero(), k1 = Eigen::Matrix2cd::Zero();
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - p);
  k1(0, 1) = std::sqrt(p);
  return {k0, k1};
}

std::array<Eigen::Matrix2cd, 2> dephasing_kraus(double p) {
  if (p < 0 || p > 1) throw std::invalid_argument("dephasing_kraus: p outside [0, 1]");
  Eigen::Matrix2cd k0 = Eigen::Matrix2cd::Zero(), k1 = Eigen::Matrix2cd::Zero();
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - p);
  k1(1, 1) = std::sqrt(p);
  return {k0, k1};
}

namespace {

bool is_single_qubit_kind(GateKind kind) {
  return kind == GateKind::ROT_X || kind == GateKind::ROT_Y || kind == GateKind::ROT_Z ||
         kind == GateKind::GLOBAL_ROT_Z;
}

// rho -> e^{-itH} rho e^{itH} column by column: M = U rho, then U M^dagger
// is (U rho U^dagger)^dagger... so conjugate, multiply, and the result is
// already the final Hermitian matrix.
void krylov_conjugate(const PauliOperator& h, double t, DensityMatrix& dm,
                      const ExpmOptions& expm) {
  const auto half_pass = [&](Eigen::MatrixXcd& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      Eigen::VectorXcd col = m.col(j);
      expm_apply(h, col, t, expm);
      m.col(j) = col;
    }
  };
  half_pass(dm.rho);        // U rho
  dm.rho.adjointInPlace();  // rho U^dagger  (rho Hermitian on entry)
  half_pass(dm.rho);        // U rho U^dagger
}

void apply_gate_channels(DensityMatrix& dm, const std::vector<int>& qubits, double p,
                         NoisyApplyStats* stats) {
  const auto damp = damping_kraus(p);
  const auto deph = dephasing_kraus(p);
  for (int q : qubits) {
    apply_kraus(dm, q, damp);
    apply_kraus(dm, q, deph);
    if (stats) stats->channel_applications += 2;
  }
}

}  // namespace

DensityMatrix noisy_apply_circuit(const Circuit& circuit, const Eigen::VectorXd& params,
                                  const NoiseModel& noise, NoisyApplyStats* stats,
                                  const ExpmOptions& expm) {
  if (noise.p1 < 0 || noise.p1 > 1 || noise.p2 < 0 || noise.p2 > 1)
    throw std::invalid_argument("noisy_apply_circuit: probabilities outside [0, 1]");
  if (params.size() != circuit.n_params())
    throw std::invalid_argument("noisy_apply_circuit: parameter count mismatch");

  DensityMatrix dm = to_density(prepare_initial_state(circuit.n_qubits, circuit.initial_state));
  for (std::size_t gi = 0; gi < circuit.gates.size(); ++gi) {
    const GateAction action = gate_action(circuit, static_cast<int>(gi), params);
    if (action.factors.empty()) {
      krylov_conjugate(*action.generator, action.time, dm, expm);
    } else {
      for (const GateFactor& f : action.factors) {
        if (f.q2 < 0)
          apply_single_qubit(dm, f.q1, f.u2);
        else
          apply_two_qubit(dm, f.q1, f.q2, f.u4);
      }
    }
    const Gate& gate = circuit.gates[gi];
    if (stats) ++stats->gates;
    apply_gate_channels(dm, gate.qubits,
                        is_single_qubit_kind(gate.kind) ? noise.p1 : noise.p2, stats);
  }
  return dm;
}

double noisy_cost(const Circuit& circuit, const Eigen::VectorXd& params,
                  const PauliOperator& h, const NoiseModel& noise, const ExpmOptions& expm) {
  if (h.n_qubits() != circuit.n_qubits)
    throw std::invalid_argument("noisy_cost: operator and circuit qubit counts differ");
  const DensityMatrix dm = noisy_apply_circuit(circuit, params, noise, nullptr, expm);
  return h.expectation(dm.rho);
}

RunRecord noisy_vqe(const PauliOperator& htarget, const Circuit& circuit,
                    const RunRecord& noiseless, const NoiseModel& noise,
                    const OptimizerConfig& cfg, const ExpmOptions& expm) {
  if (noiseless.failed)
    throw std::invalid_argument("noisy_vqe: warm-start record is flagged failed");
  if (noiseless.steps.empty())
    throw std::invalid_argument("noisy_vqe: warm-start record has no steps");
  if (noiseless.steps.back().best_params.size() != circuit.n_params())
    throw std::invalid_argument("noisy_vqe: warm-start parameter count mismatch");

  RunRecord record;
  record.config_hash = noiseless.config_hash;
  record.ansatz_id = noiseless.ansatz_id;
  record.n_qubits = noiseless.n_qubits;
  record.depth = noiseless.depth;
  record.model = noiseless.model;
  record.seed = noiseless.seed;
  record.noise_preset = "custom";
  record.noise_p1 = noise.p1;
  record.noise_p2 = noise.p2;

  const CostFn cost_fn = [&](const Eigen::VectorXd& p) {
    return noisy_cost(circuit, p, htarget, noise, expm);
  };
  const GradFn grad_fn = [&](const Eigen::VectorXd& p) {
    return finite_difference_gradient(circuit, cost_fn, p, cfg.grad_step);
  };

  const auto t0 = std::chrono::steady_clock::now();
  StepRecord step;
  step.s = noiseless.steps.back().s;
  step.init_params = noiseless.steps.back().best_params;
  try {
    const AdamResult r = adam_minimize_fn(cost_fn, grad_fn, step.init_params, cfg);
    step.best_params = r.params;
    step.best_energy = r.energy;
    step.iters = r.iters;
    record.energy = r.energy;
  } catch (const std::exception& e) {
    record.failed = true;
    record.fail_reason = e.what();
  }
  record.steps.push_back(std::move(step));
  record.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return record;
}

}  // namespace wqed
