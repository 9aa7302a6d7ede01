#include "wqed/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

#include "wqed/rng.hpp"

namespace wqed {

namespace {

void check_orthonormal(const Eigen::MatrixXcd& basis) {
  if (basis.cols() < 1) throw std::invalid_argument("metrics: empty ground-space basis");
  const Eigen::MatrixXcd gram = basis.adjoint() * basis;
  const double err =
      (gram - Eigen::MatrixXcd::Identity(basis.cols(), basis.cols())).cwiseAbs().maxCoeff();
  if (err > 1e-8)
    throw std::invalid_argument("metrics: ground-space basis not orthonormal");
}

}  // namespace

double infidelity(const StateVector& psi, const Eigen::MatrixXcd& gs_basis) {
  if (gs_basis.rows() != psi.amps.size())
    throw std::invalid_argument("infidelity: basis dimension mismatch");
  check_orthonormal(gs_basis);
  const double overlap = (gs_basis.adjoint() * psi.amps).norm();
  return 1.0 - std::min(overlap, 1.0);
}

double mixed_infidelity(const DensityMatrix& rho, const Eigen::MatrixXcd& gs_basis) {
  if (gs_basis.rows() != rho.rho.rows())
    throw std::invalid_argument("mixed_infidelity: basis dimension mismatch");
  check_orthonormal(gs_basis);
  double weight = 0.0;
  for (Eigen::Index k = 0; k < gs_basis.cols(); ++k)
    weight += std::real(gs_basis.col(k).dot(rho.rho * gs_basis.col(k)));
  weight = std::clamp(weight, 0.0, 1.0);
  return 1.0 - std::sqrt(weight);
}

double residual_energy(double e, double e_min, double e_max, bool* clipped) {
  if (!(e_max > e_min))
    throw std::invalid_argument("residual_energy: spectrum has no width");
  const double eps = (e - e_min) / (e_max - e_min);
  if (clipped) *clipped = std::max(-eps, eps - 1.0) > 1e-9;
  return std::clamp(eps, 0.0, 1.0);
}

std::vector<DepthSweepEntry> min_depth_sweep(const std::vector<RunRecord>& records,
                                             double threshold) {
  if (threshold <= 0 || threshold > 1)
    throw std::invalid_argument("min_depth_sweep: threshold must be in (0, 1]");
  // (ansatz, n) -> depth -> best fidelity over seeds
  std::map<std::pair<std::string, int>, std::map<int, double>> best;
  for (const RunRecord& r : records) {
    if (r.failed || !r.infidelity) continue;
    const double fid = 1.0 - *r.infidelity;
    auto& per_depth = best[{r.ansatz_id, r.n_qubits}];
    auto [it, fresh] = per_depth.emplace(r.depth, fid);
    if (!fresh) it->second = std::max(it->second, fid);
  }
  std::vector<DepthSweepEntry> out;
  for (const auto& [key, per_depth] : best) {
    DepthSweepEntry entry;
    entry.ansatz_id = key.first;
    entry.n_qubits = key.second;
    const int d_lo = per_depth.begin()->first;
    const int d_hi = per_depth.rbegin()->first;
    for (int d = d_lo; d <= d_hi; ++d)
      if (!per_depth.count(d)) entry.missing_depths.push_back(d);
    for (const auto& [depth, fidelity] : per_depth) {
      if (fidelity >= threshold) {
        entry.d_min = depth;
        entry.reached = true;
        break;
      }
    }
    out.push_back(std::move(entry));
  }
  return out;
}

double mp_cdf(double x) {
  if (x <= 0) return 0.0;
  if (x >= 4) return 1.0;
  return (4.0 * std::asin(0.5 * std::sqrt(x)) + std::sqrt(x * (4.0 - x))) /
         (2.0 * std::numbers::pi);
}

double ks_distance(const std::vector<double>& sorted_samples, double (*cdf)(double)) {
  const std::size_t n = sorted_samples.size();
  if (n == 0) throw std::invalid_argument("ks_distance: no samples");
  double sup = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = cdf(sorted_samples[i]);
    sup = std::max(sup, std::abs(f - static_cast<double>(i) / n));
    sup = std::max(sup, std::abs(f - static_cast<double>(i + 1) / n));
  }
  return sup;
}

SpectrumSamples entanglement_spectrum(const Circuit& circuit, int n_samples,
                                      std::uint64_t seed, const ExpmOptions& expm) {
  if (circuit.n_qubits % 2 != 0)
    throw std::invalid_argument("entanglement_spectrum: needs even n for a half-chain cut");
  if (n_samples < 1) throw std::invalid_argument("entanglement_spectrum: n_samples >= 1");

  const int half = circuit.n_qubits / 2;
  std::vector<int> keep(half);
  for (int q = 0; q < half; ++q) keep[q] = q;
  const double scale = std::pow(2.0, half);

  SpectrumSamples out;
  out.n_samples = n_samples;
  out.eigenvalues.reserve(static_cast<std::size_t>(n_samples) << half);
  Eigen::VectorXd params(circuit.n_params());
  for (int i = 0; i < n_samples; ++i) {
    Rng rng(seed, static_cast<std::uint64_t>(i));
    for (int k = 0; k < circuit.n_params(); ++k) {
      const SlotInfo& slot = circuit.slots[k];
      params[k] = slot.frozen ? slot.value : rng.uniform(2.0 * std::numbers::pi);
    }
    const StateVector psi = apply_circuit(circuit, params, expm);
    const DensityMatrix reduced = reduced_density(psi, keep);
    const Eigen::VectorXd evs = density_eigenvalues(reduced);
    if (std::abs(evs.sum() - 1.0) > 1e-10)
      throw std::runtime_error("entanglement_spectrum: reduced spectrum does not sum to 1");
    for (Eigen::Index k = 0; k < evs.size(); ++k)
      out.eigenvalues.push_back(scale * evs[k]);
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  out.ks_distance = ks_distance(out.eigenvalues, &mp_cdf);
  return out;
}

}  // namespace wqed
