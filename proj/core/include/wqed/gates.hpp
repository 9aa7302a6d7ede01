#pragma once

#include <span>

#include "wqed/state.hpp"

namespace wqed {

// Rotation convention: R_a(theta) = exp(-i theta sigma_a), angle not halved,
// so R_x(pi/2)|0> = -i|1> and R_z(theta)|0> = e^{-i theta}|0>.
Eigen::Matrix2cd rot_x(double theta);
Eigen::Matrix2cd rot_y(double theta);
Eigen::Matrix2cd rot_z(double theta);

/// exp(-i phi X(x)X) on two qubits: cos(phi) I - i sin(phi) XX.
Eigen::Matrix4cd pair_xx(double phi);

/// exp(-i phi A(x)B) for single-qubit Paulis A, B (each of X, Y, Z).
Eigen::Matrix4cd pair_rotation(int pauli_a, int pauli_b, double phi);

Eigen::Matrix4cd cz_matrix();

/// In-place u on qubit q. Throws if u is not unitary to 1e-12 or q is out of
/// range.
void apply_single_qubit(StateVector& psi, int q, const Eigen::Matrix2cd& u);

/// In-place u on the ordered pair (q1, q2); q1 indexes the more significant
/// bit of u's 4-dimensional basis. q1 != q2 required.
void apply_two_qubit(StateVector& psi, int q1, int q2, const Eigen::Matrix4cd& u);

/// rho -> u rho u^dagger on qubit q.
void apply_single_qubit(DensityMatrix& rho, int q, const Eigen::Matrix2cd& u);

/// rho -> u rho u^dagger on the ordered pair (q1, q2).
void apply_two_qubit(DensityMatrix& rho, int q1, int q2, const Eigen::Matrix4cd& u);

/// rho -> sum_k K_k rho K_k^dagger on qubit q. The Kraus set must satisfy
/// sum K^dagger K = I within 1e-10 (checked).
void apply_kraus(DensityMatrix& rho, int q, std::span<const Eigen::Matrix2cd> kraus);

}  // namespace wqed
