#include "wqed/state.hpp"

#include <cmath>
#include <stdexcept>

namespace wqed {

namespace {

void check_n(int n) {
  if (n < 1 || n > 24) throw std::invalid_argument("n_qubits out of range [1, 24]");
}

}  // namespace

StateVector basis_state(int n_qubits, std::uint64_t bits) {
  check_n(n_qubits);
  StateVector s(n_qubits);
  if (bits >= static_cast<std::uint64_t>(s.dim()))
    throw std::invalid_argument("basis_state: bits out of range");
  s.amps[static_cast<std::int64_t>(bits)] = 1.0;
  return s;
}

StateVector prepare_initial_state(int n_qubits, InitialState which) {
  check_n(n_qubits);
  switch (which) {
    case InitialState::ALL_ZERO:
      return basis_state(n_qubits, 0);
    case InitialState::ALL_DOWN:
      return basis_state(n_qubits, (std::uint64_t{1} << n_qubits) - 1);
    case InitialState::NEEL: {
      std::uint64_t bits = 0;
      for (int q = 1; q < n_qubits; q += 2) bits |= std::uint64_t{1} << (n_qubits - 1 - q);
      return basis_state(n_qubits, bits);
    }
    case InitialState::BELL_PAIRS: {
      if (n_qubits % 2 != 0)
        throw std::invalid_argument("BELL_PAIRS requires an even qubit count");
      // (|00> - |11>)/sqrt(2) on each pair; product over pairs expands to
      // amplitudes (-1)^{#pairs set} 2^{-n/4...}; build it iteratively.
      StateVector s(n_qubits);
      const int pairs = n_qubits / 2;
      const double amp = std::pow(2.0, -0.5 * pairs);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        std::uint64_t bits = 0;
        int sign = 0;
        for (int p = 0; p < pairs; ++p) {
          if (mask & (std::uint64_t{1} << p)) {
            sign ^= 1;
            bits |= std::uint64_t{3} << (n_qubits - 2 - 2 * p);
          }
        }
        s.amps[static_cast<std::int64_t>(bits)] = sign ? -amp : amp;
      }
      return s;
    }
  }
  throw std::invalid_argument("unknown initial state");
}

DensityMatrix::DensityMatrix(int n) : n_qubits(n) {
  check_n(n);
  if (n > 12) throw std::invalid_argument("DensityMatrix: n_qubits > 12 unsupported");
  rho = Eigen::MatrixXcd::Zero(dim(), dim());
}

DensityMatrix to_density(const StateVector& psi) {
  DensityMatrix d(psi.n_qubits);
  d.rho = psi.amps * psi.amps.adjoint();
  return d;
}

DensityMatrix maximally_mixed(int n_qubits) {
  DensityMatrix d(n_qubits);
  d.rho = Eigen::MatrixXcd::Identity(d.dim(), d.dim()) / static_cast<double>(d.dim());
  return d;
}

namespace {

// Splits a full-register index into (kept bits, traced bits) positions once,
// so the reduction loops below are simple shifts.
struct BitSplit {
  std::vector<int> keep_shift;   // full-index shift of each kept qubit
  std::vector<int> trace_shift;  // full-index shift of each traced qubit
};

BitSplit make_split(int n, const std::vector<int>& keep) {
  std::vector<bool> kept(n, false);
  for (int q : keep) {
    if (q < 0 || q >= n) throw std::invalid_argument("reduced_density: bad qubit");
    if (kept[q]) throw std::invalid_argument("reduced_density: repeated qubit");
    kept[q] = true;
  }
  for (size_t i = 1; i < keep.size(); ++i)
    if (keep[i] <= keep[i - 1])
      throw std::invalid_argument("reduced_density: keep must be ascending");
  BitSplit s;
  for (int q : keep) s.keep_shift.push_back(n - 1 - q);
  for (int q = 0; q < n; ++q)
    if (!kept[q]) s.trace_shift.push_back(n - 1 - q);
  return s;
}

std::int64_t compose(std::uint64_t part, const std::vector<int>& shifts) {
  std::int64_t idx = 0;
  for (size_t i = 0; i < shifts.size(); ++i)
    if (part & (std::uint64_t{1} << (shifts.size() - 1 - i)))
      idx |= std::int64_t{1} << shifts[i];
  return idx;
}

}  // namespace

DensityMatrix reduced_density(const StateVector& psi, const std::vector<int>& keep) {
  if (keep.empty() || keep.size() > 12)
    throw std::invalid_argument("reduced_density: keep size out of range");
  const BitSplit split = make_split(psi.n_qubits, keep);
  const int k = static_cast<int>(keep.size());
  const int t = psi.n_qubits - k;
  DensityMatrix out(k);
  for (std::uint64_t tb = 0; tb < (std::uint64_t{1} << t); ++tb) {
    const std::int64_t tidx = compose(tb, split.trace_shift);
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << k); ++a) {
      const std::complex<double> va = psi.amps[compose(a, split.keep_shift) | tidx];
      if (va == std::complex<double>(0.0, 0.0)) continue;
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << k); ++b) {
        const std::complex<double> vb = psi.amps[compose(b, split.keep_shift) | tidx];
        out.rho(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)) +=
            va * std::conj(vb);
      }
    }
  }
  return out;
}

DensityMatrix reduced_density(const DensityMatrix& full, const std::vector<int>& keep) {
  const BitSplit split = make_split(full.n_qubits, keep);
  const int k = static_cast<int>(keep.size());
  const int t = full.n_qubits - k;
  DensityMatrix out(k);
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << k); ++a)
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << k); ++b) {
      std::complex<double> acc = 0.0;
      for (std::uint64_t tb = 0; tb < (std::uint64_t{1} << t); ++tb) {
        const std::int64_t tidx = compose(tb, split.trace_shift);
        acc += full.rho(compose(a, split.keep_shift) | tidx,
                        compose(b, split.keep_shift) | tidx);
      }
      out.rho(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)) = acc;
    }
  return out;
}

Eigen::VectorXd density_eigenvalues(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.rho,
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("density_eigenvalues: eigensolver failed");
  return solver.eigenvalues();
}

}  // namespace wqed
