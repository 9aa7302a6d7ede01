#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wqed/hamiltonians.hpp"
#include "wqed/version.hpp"

namespace wqed {

// One interpolation step of an adiabatically-assisted run. init_params of
// step k+1 equal best_params of step k (warm start); best_* track the lowest
// cost seen during the step, not the last iterate.
struct StepRecord {
  double s = 1.0;
  Eigen::VectorXd init_params;
  Eigen::VectorXd best_params;
  double best_energy = 0.0;
  int iters = 0;
};

// Everything one optimization run produces. Metric fields are filled after
// the fact (they need exact diagonalization) and stay unset for standalone
// runs. wall_seconds is the only field excluded from content_json().
struct RunRecord {
  int schema_version = kSchemaVersion;
  std::string config_hash;  // empty for runs outside the harness
  std::string ansatz_id;
  int n_qubits = 0;
  int depth = 0;
  ModelSpec model;
  std::uint64_t seed = 0;

  // Noise context; preset is "", "low", "high", or "custom".
  std::string noise_preset;
  std::optional<double> noise_p1;
  std::optional<double> noise_p2;

  std::vector<StepRecord> steps;

  std::optional<double> energy;        // best cost at the final step
  std::optional<double> exact_energy;  // ground energy of the final cost
  std::optional<double> infidelity;
  std::optional<double> residual_energy;
  std::optional<int> ground_degeneracy;

  double wall_seconds = 0.0;
  bool failed = false;
  std::string fail_reason;

  int total_iters() const;

  /// Canonical serialization minus wall_seconds; equal strings == equal runs.
  std::string content_json() const;
};

/// JSON-lines encoding: first line the run header, then one line per step.
std::string to_jsonl(const RunRecord& record);
RunRecord from_jsonl(const std::string& text);

/// Atomic persistence: writes to a temp file in the target directory and
/// renames over the destination, so readers never observe a partial record.
void save_record(const std::filesystem::path& path, const RunRecord& record);
RunRecord load_record(const std::filesystem::path& path);

}  // namespace wqed
