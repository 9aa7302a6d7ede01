#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace wqed {

// Computational-basis convention used throughout: qubit 0 is the most
// significant bit of the basis index, and Z|0> = +|0>.
enum class InitialState { ALL_ZERO, ALL_DOWN, NEEL, BELL_PAIRS };

// Pure state on n qubits, amplitudes indexed by basis integer.
struct StateVector {
  int n_qubits = 0;
  Eigen::VectorXcd amps;

  StateVector() = default;
  explicit StateVector(int n) : n_qubits(n), amps(Eigen::VectorXcd::Zero(dim())) {}

  std::int64_t dim() const { return std::int64_t{1} << n_qubits; }
  double norm() const { return amps.norm(); }
};

/// Basis state |bits>, bits given as the basis integer.
StateVector basis_state(int n_qubits, std::uint64_t bits);

/// Prepares one of the named product/paired initial states.
/// BELL_PAIRS puts (|00> - |11>)/sqrt(2) on qubit pairs (0,1), (2,3), ...
/// and requires even n; NEEL alternates |0>,|1> starting from qubit 0.
StateVector prepare_initial_state(int n_qubits, InitialState which);

// Mixed state on n qubits as a dense 2^n x 2^n matrix. Dense storage caps the
// practical size at n <= 12.
struct DensityMatrix {
  int n_qubits = 0;
  Eigen::MatrixXcd rho;

  DensityMatrix() = default;
  explicit DensityMatrix(int n);

  std::int64_t dim() const { return std::int64_t{1} << n_qubits; }
  double trace_real() const { return rho.trace().real(); }
  double purity() const { return rho.squaredNorm(); }
};

/// |psi><psi| as a density matrix.
DensityMatrix to_density(const StateVector& psi);

/// Maximally mixed state I / 2^n.
DensityMatrix maximally_mixed(int n_qubits);

/// Reduced state on `keep` (distinct qubit indices, ascending order in the
/// reduced register), tracing out the rest.
DensityMatrix reduced_density(const StateVector& psi, const std::vector<int>& keep);
DensityMatrix reduced_density(const DensityMatrix& full, const std::vector<int>& keep);

/// Ascending eigenvalues of a Hermitian density matrix.
Eigen::VectorXd density_eigenvalues(const DensityMatrix& rho);

}  // namespace wqed
