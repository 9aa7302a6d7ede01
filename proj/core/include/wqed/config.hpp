#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wqed/hamiltonians.hpp"
#include "wqed/noise.hpp"
#include "wqed/version.hpp"
#include "wqed/vqe.hpp"

namespace wqed {

// One ansatz family swept over an inclusive, contiguous depth range.
struct AnsatzSweep {
  std::string id;
  int depth_min = 1;
  int depth_max = 1;
  int n_exp = 2;            // wqed-powerlaw only
  bool freeze_fit = false;  // wqed-powerlaw only
};

// Optional entanglement-spectrum sampling pass over the same qubit sizes.
struct SpectrumJob {
  std::vector<std::string> ansatz_ids;
  int depth_min = 1;
  int depth_max = 1;
  int n_samples = 100;
  std::uint64_t seed = 7;
};

struct ExperimentConfig {
  int schema_version = kSchemaVersion;
  ModelSpec model;  // n_qubits here is unused; `qubits` drives the sweep
  std::vector<int> qubits;
  std::vector<AnsatzSweep> ansatzes;
  std::vector<std::uint64_t> seeds;
  OptimizerConfig optimizer;
  Schedule schedule;
  // s_end accepts "auto" (the default): 1.0 for interpolation to the full
  // target, or the gap-matched endpoint for the long-range Ising model.
  bool s_end_explicit = false;
  std::optional<NoiseModel> noise;
  std::string noise_preset;  // "", "low", "high", "custom"
  int max_noisy_qubits = 10;
  std::string output_dir = "results";
  std::optional<SpectrumJob> spectrum;
};

/// Parses the JSON experiment grammar (documented in the README). Unknown
/// keys, missing required keys and invalid ranges raise std::runtime_error
/// with line/column positions where the text admits them.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Canonical serialization: every field explicit, keys sorted. Feeding the
/// result back through parse_config reproduces the identical hash.
std::string serialize_config(const ExperimentConfig& cfg);

/// FNV-1a 64 digest (16 hex chars) of the canonical content. Output location
/// and the noisy-size guard are excluded: relocating results or relaxing a
/// resource cap does not invalidate computed records.
std::string config_hash(const ExperimentConfig& cfg);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace wqed
