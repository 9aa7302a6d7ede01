#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>

#include "wqed/circuit.hpp"
#include "wqed/records.hpp"
#include "wqed/state.hpp"
#include "wqed/vqe.hpp"

namespace wqed {

// Per-gate error probabilities: p1 after every single-qubit gate, p2 after
// every multi-qubit gate (once per acted qubit, regardless of range).
struct NoiseModel {
  double p1 = 0.0;
  double p2 = 0.0;
};

/// Named presets: "low" = {1e-5, 5e-4}, "high" = {1e-4, 5e-3}.
NoiseModel noise_preset(const std::string& name);

/// Amplitude damping: {{1,0},{0,sqrt(1-p)}}, {{0,sqrt(p)},{0,0}}.
std::array<Eigen::Matrix2cd, 2> damping_kraus(double p);

/// Phase damping: {diag(1, sqrt(1-p)), diag(0, sqrt(p))}.
std::array<Eigen::Matrix2cd, 2> dephasing_kraus(double p);

struct NoisyApplyStats {
  long gates = 0;
  long channel_applications = 0;  // one per (channel, qubit); 2 per noisy qubit
};

/// Density-matrix evolution: each gate is applied as a conjugation, followed
/// by damping then dephasing on every acted qubit (p1 for single-qubit
/// kinds, p2 otherwise). The global z-rotation counts as n single-qubit
/// gates.
DensityMatrix noisy_apply_circuit(const Circuit& circuit, const Eigen::VectorXd& params,
                                  const NoiseModel& noise, NoisyApplyStats* stats = nullptr,
                                  const ExpmOptions& expm = {});

/// tr(h rho(params)) under the error model.
double noisy_cost(const Circuit& circuit, const Eigen::VectorXd& params,
                  const PauliOperator& h, const NoiseModel& noise,
                  const ExpmOptions& expm = {});

/// Single Adam descent of the noisy cost, warm-started from the final
/// parameters of a completed noiseless run. Metric fields are left for the
/// caller (they need the exact ground space).
RunRecord noisy_vqe(const PauliOperator& htarget, const Circuit& circuit,
                    const RunRecord& noiseless, const NoiseModel& noise,
                    const OptimizerConfig& cfg, const ExpmOptions& expm = {});

}  // namespace wqed
