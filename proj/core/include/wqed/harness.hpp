#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "wqed/config.hpp"
#include "wqed/records.hpp"

namespace wqed {

/// Worker-count override consulted when HarnessOptions.jobs == 0.
inline constexpr const char* kWorkerEnvVar = "WQED_NUM_WORKERS";

struct HarnessOptions {
  int jobs = 0;                  // 0 = env var, then hardware concurrency
  bool force = false;            // recompute records that already exist
  long memory_budget_mb = 3000;  // shrinks the pool if estimates exceed it
  std::ostream* log = nullptr;   // progress + warnings; null = std::cerr
};

struct HarnessResult {
  std::filesystem::path dir;
  int computed = 0;
  int skipped = 0;
  int failed = 0;
};

/// Runs the full (ansatz, n, depth, seed) grid of cfg, persisting one record
/// file per run under <output_dir>/records/, plus manifest.json and a
/// deterministic summary.csv. Reruns skip completed records unless force is
/// set. Run failures are isolated, logged and counted, never thrown.
HarnessResult run_experiment(const ExperimentConfig& cfg, const HarnessOptions& opts = {});

/// Figure-ready CSV tables under <dir>/tables for one of: fig2a, fig2b,
/// fig2c, fig2d, fig3, fig4, sm_spectrum. Gaps in the record set produce
/// warnings on `warn` and a partial table. Returns the files written.
std::vector<std::filesystem::path> report_figure(const std::filesystem::path& dir,
                                                 const std::string& figure, std::ostream& warn);

/// Every optimization record under <dir>/records, ordered by file name.
std::vector<RunRecord> load_all_records(const std::filesystem::path& dir);

/// Locale-independent shortest round-trip formatting used in all tables.
std::string format_double(double v);

}  // namespace wqed
