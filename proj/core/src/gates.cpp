#include "wqed/gates.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace wqed {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

void check_unitary2(const Eigen::Matrix2cd& u) {
  if ((u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("apply_single_qubit: matrix is not unitary");
}

void check_unitary4(const Eigen::Matrix4cd& u) {
  if ((u.adjoint() * u - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("apply_two_qubit: matrix is not unitary");
}

void check_qubit(int n, int q, const char* who) {
  if (q < 0 || q >= n) throw std::invalid_argument(std::string(who) + ": qubit out of range");
}

// 2x2 kernel over one contiguous array of 2^n amplitudes.
void kernel_1q(cd* data, int n, int q, const Eigen::Matrix2cd& u) {
  const std::int64_t dim = std::int64_t{1} << n;
  const std::int64_t stride = std::int64_t{1} << (n - 1 - q);
  const cd u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  for (std::int64_t base = 0; base < dim; base += 2 * stride)
    for (std::int64_t k = 0; k < stride; ++k) {
      cd& a = data[base + k];
      cd& b = data[base + k + stride];
      const cd a0 = a, b0 = b;
      a = u00 * a0 + u01 * b0;
      b = u10 * a0 + u11 * b0;
    }
}

std::int64_t insert_zero(std::int64_t v, int pos) {
  const std::int64_t low = v & ((std::int64_t{1} << pos) - 1);
  return ((v >> pos) << (pos + 1)) | low;
}

// 4x4 kernel; q1 is the more significant bit of u's basis.
void kernel_2q(cd* data, int n, int q1, int q2, const Eigen::Matrix4cd& u) {
  const std::int64_t dim = std::int64_t{1} << n;
  const std::int64_t m1 = std::int64_t{1} << (n - 1 - q1);
  const std::int64_t m2 = std::int64_t{1} << (n - 1 - q2);
  const int plo = std::min(n - 1 - q1, n - 1 - q2);
  const int phi = std::max(n - 1 - q1, n - 1 - q2);
  for (std::int64_t b = 0; b < dim / 4; ++b) {
    const std::int64_t i00 = insert_zero(insert_zero(b, plo), phi);
    const std::int64_t idx[4] = {i00, i00 | m2, i00 | m1, i00 | m1 | m2};
    cd v[4];
    for (int r = 0; r < 4; ++r) v[r] = data[idx[r]];
    for (int r = 0; r < 4; ++r)
      data[idx[r]] = u(r, 0) * v[0] + u(r, 1) * v[1] + u(r, 2) * v[2] + u(r, 3) * v[3];
  }
}

// rho -> M rho M^dagger for an arbitrary (not necessarily unitary) M acting
// on one or two qubits, via two column passes separated by adjoints.
template <typename Kernel>
void conjugate_dm(Eigen::MatrixXcd& rho, Kernel&& column_kernel) {
  const std::int64_t dim = rho.rows();
  for (std::int64_t j = 0; j < dim; ++j) column_kernel(rho.col(j).data());
  rho.adjointInPlace();
  for (std::int64_t j = 0; j < dim; ++j) column_kernel(rho.col(j).data());
  rho.adjointInPlace();
}

}  // namespace

Eigen::Matrix2cd rot_x(double theta) {
  Eigen::Matrix2cd m;
  m << std::cos(theta), -kI * std::sin(theta), -kI * std::sin(theta), std::cos(theta);
  return m;
}

Eigen::Matrix2cd rot_y(double theta) {
  Eigen::Matrix2cd m;
  m << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return m;
}

Eigen::Matrix2cd rot_z(double theta) {
  Eigen::Matrix2cd m;
  m << std::exp(-kI * theta), 0.0, 0.0, std::exp(kI * theta);
  return m;
}

Eigen::Matrix4cd pair_xx(double phi) {
  Eigen::Matrix4cd m = std::cos(phi) * Eigen::Matrix4cd::Identity();
  const cd s = -kI * std::sin(phi);
  m(0, 3) = s;
  m(1, 2) = s;
  m(2, 1) = s;
  m(3, 0) = s;
  return m;
}

Eigen::Matrix4cd pair_rotation(int pauli_a, int pauli_b, double phi) {
  auto single = [](int p) -> Eigen::Matrix2cd {
    Eigen::Matrix2cd m;
    switch (p) {
      case 1: m << 0, 1, 1, 0; return m;                 // X
      case 2: m << 0, -kI, kI, 0; return m;              // Y
      case 3: m << 1, 0, 0, -1; return m;                // Z
      default: throw std::invalid_argument("pair_rotation: Pauli must be X, Y or Z");
    }
  };
  Eigen::Matrix4cd g = Eigen::Matrix4cd::Zero();
  const Eigen::Matrix2cd a = single(pauli_a), b = single(pauli_b);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  // A(x)B squares to the identity, so the exponential closes in two terms.
  return std::cos(phi) * Eigen::Matrix4cd::Identity() - kI * std::sin(phi) * g;
}

Eigen::Matrix4cd cz_matrix() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  m(3, 3) = -1.0;
  return m;
}

void apply_single_qubit(StateVector& psi, int q, const Eigen::Matrix2cd& u) {
  check_qubit(psi.n_qubits, q, "apply_single_qubit");
  check_unitary2(u);
  kernel_1q(psi.amps.data(), psi.n_qubits, q, u);
}

void apply_two_qubit(StateVector& psi, int q1, int q2, const Eigen::Matrix4cd& u) {
  check_qubit(psi.n_qubits, q1, "apply_two_qubit");
  check_qubit(psi.n_qubits, q2, "apply_two_qubit");
  if (q1 == q2) throw std::invalid_argument("apply_two_qubit: qubits must differ");
  check_unitary4(u);
  kernel_2q(psi.amps.data(), psi.n_qubits, q1, q2, u);
}

void apply_single_qubit(DensityMatrix& rho, int q, const Eigen::Matrix2cd& u) {
  check_qubit(rho.n_qubits, q, "apply_single_qubit");
  check_unitary2(u);
  conjugate_dm(rho.rho, [&](cd* col) { kernel_1q(col, rho.n_qubits, q, u); });
}

void apply_two_qubit(DensityMatrix& rho, int q1, int q2, const Eigen::Matrix4cd& u) {
  check_qubit(rho.n_qubits, q1, "apply_two_qubit");
  check_qubit(rho.n_qubits, q2, "apply_two_qubit");
  if (q1 == q2) throw std::invalid_argument("apply_two_qubit: qubits must differ");
  check_unitary4(u);
  conjugate_dm(rho.rho, [&](cd* col) { kernel_2q(col, rho.n_qubits, q1, q2, u); });
}

void apply_kraus(DensityMatrix& rho, int q, std::span<const Eigen::Matrix2cd> kraus) {
  check_qubit(rho.n_qubits, q, "apply_kraus");
  if (kraus.empty()) throw std::invalid_argument("apply_kraus: empty Kraus set");
  Eigen::Matrix2cd completeness = Eigen::Matrix2cd::Zero();
  for (const auto& k : kraus) completeness += k.adjoint() * k;
  if ((completeness - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("apply_kraus: Kraus set is not trace preserving");

  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(rho.dim(), rho.dim());
  Eigen::MatrixXcd tmp;
  for (const auto& k : kraus) {
    tmp = rho.rho;
    conjugate_dm(tmp, [&](cd* col) { kernel_1q(col, rho.n_qubits, q, k); });
    acc += tmp;
  }
  rho.rho.swap(acc);
}

}  // namespace wqed
