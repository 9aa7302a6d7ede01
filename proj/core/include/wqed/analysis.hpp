#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "wqed/circuit.hpp"
#include "wqed/records.hpp"
#include "wqed/spectral.hpp"
#include "wqed/state.hpp"

namespace wqed {

/// 1 - |P psi| where P projects onto the span of the (orthonormal, checked
/// to 1e-8) basis columns. With a single column this is 1 - |<gs|psi>|.
double infidelity(const StateVector& psi, const Eigen::MatrixXcd& gs_basis);

/// Uhlmann fidelity against the ground subspace: 1 - sqrt(tr(P rho)).
/// Coincides with the pure-state definition for rank-1 rho and 1-dim basis.
double mixed_infidelity(const DensityMatrix& rho, const Eigen::MatrixXcd& gs_basis);

/// (e - e_min) / (e_max - e_min), clipped to [0, 1]. Overshoot beyond 1e-9
/// on either side is reported through *clipped when non-null.
double residual_energy(double e, double e_min, double e_max, bool* clipped = nullptr);

struct MetricReport {
  std::string ansatz_id;
  int n_qubits = 0;
  int depth = 0;
  double infidelity = 0.0;
  double residual_energy = 0.0;
  int ground_degeneracy = 1;
};

// Minimum depth at which the best-of-seeds fidelity reaches the threshold.
// reached == false marks ansatz/size pairs that never qualify; holes in the
// scanned depth range are reported but do not invalidate the entry.
struct DepthSweepEntry {
  std::string ansatz_id;
  int n_qubits = 0;
  int d_min = -1;
  bool reached = false;
  std::vector<int> missing_depths;
};

std::vector<DepthSweepEntry> min_depth_sweep(const std::vector<RunRecord>& records,
                                             double threshold);

// Pooled half-chain reduced-density eigenvalues (rescaled by 2^{n/2}) over
// uniformly drawn parameter vectors, plus the Kolmogorov-Smirnov distance to
// the square-case Marchenko-Pastur law.
struct SpectrumSamples {
  std::vector<double> eigenvalues;  // sorted ascending
  double ks_distance = 1.0;
  int n_samples = 0;
};

/// Samples with parameters uniform in [0, 2 pi) per free slot (frozen slots
/// stay at their declared values); sample i uses the sub-seeded stream
/// (seed, i). Requires even n for the half-chain cut.
SpectrumSamples entanglement_spectrum(const Circuit& circuit, int n_samples,
                                      std::uint64_t seed, const ExpmOptions& expm = {});

/// CDF of the Marchenko-Pastur law with ratio 1, density
/// sqrt(4/x - 1) / (2 pi) on (0, 4].
double mp_cdf(double x);

/// sup_x |F_empirical(x) - F(x)| for sorted samples against a continuous CDF.
double ks_distance(const std::vector<double>& sorted_samples, double (*cdf)(double));

}  // namespace wqed
