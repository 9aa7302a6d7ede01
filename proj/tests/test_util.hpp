#pragma once

// Dense reference implementations used as independent oracles. Everything is
// straight-line linear algebra (explicit Kronecker products, full
// eigendecompositions, index-level partial traces) so the production kernels
// are checked against code that shares none of their machinery.

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "wqed/pauli.hpp"
#include "wqed/state.hpp"

namespace oracle {

using cd = std::complex<double>;

inline Eigen::Matrix2cd pauli_matrix(wqed::Pauli p) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  switch (p) {
    case wqed::Pauli::I:
      m << 1, 0, 0, 1;
      break;
    case wqed::Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case wqed::Pauli::Y:
      m << 0, cd(0, -1), cd(0, 1), 0;
      break;
    case wqed::Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

// Tensor product with labels[0] on qubit 0 = the most significant bit, i.e.
// the leftmost Kronecker factor.
inline Eigen::MatrixXcd kron_string(const std::vector<wqed::Pauli>& labels) {
  // Right-to-left so that labels[0] ends up as the leftmost factor.
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
    const Eigen::Matrix2cd m = pauli_matrix(*it);
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) next.block(r * out.rows(), c * out.cols(), out.rows(), out.cols()) = m(r, c) * out;
    out = std::move(next);
  }
  return out;
}

inline Eigen::MatrixXcd to_dense(const wqed::PauliOperator& op) {
  const long dim = 1L << op.n_qubits();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (const wqed::PauliTerm& t : op.terms()) h += t.coeff * kron_string(op.term_labels(t));
  return h;
}

// u on qubit q embedded into n qubits by explicit index matching.
inline Eigen::MatrixXcd embed_single(int n, int q, const Eigen::Matrix2cd& u) {
  const long dim = 1L << n;
  const int shift = n - 1 - q;
  Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(dim, dim);
  for (long i = 0; i < dim; ++i) {
    const long rest = i & ~(1L << shift);
    const int bi = static_cast<int>((i >> shift) & 1);
    for (int bj = 0; bj < 2; ++bj) big(i, rest | (static_cast<long>(bj) << shift)) = u(bi, bj);
  }
  return big;
}

// u on the ordered pair (q1, q2); q1 is the more significant bit of u's basis.
inline Eigen::MatrixXcd embed_two(int n, int q1, int q2, const Eigen::Matrix4cd& u) {
  if (q1 == q2) throw std::invalid_argument("embed_two: equal qubits");
  const long dim = 1L << n;
  const int s1 = n - 1 - q1, s2 = n - 1 - q2;
  Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(dim, dim);
  for (long i = 0; i < dim; ++i) {
    const long rest = i & ~((1L << s1) | (1L << s2));
    const int bi = static_cast<int>(((i >> s1) & 1) * 2 + ((i >> s2) & 1));
    for (int bj = 0; bj < 4; ++bj) {
      const long j = rest | (static_cast<long>((bj >> 1) & 1) << s1) | (static_cast<long>(bj & 1) << s2);
      big(i, j) = u(bi, bj);
    }
  }
  return big;
}

// exp(-i t h) for Hermitian h through a full eigendecomposition.
inline Eigen::MatrixXcd expm_dense(const Eigen::MatrixXcd& h, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success) throw std::runtime_error("expm_dense: eigensolver failed");
  const Eigen::VectorXcd phases =
      (cd(0, -t) * es.eigenvalues().cast<cd>().array()).exp().matrix();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// Partial trace keeping `keep` (ascending), keep[0] most significant in the
// reduced register, matching the production convention.
inline Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& rho, int n,
                                      const std::vector<int>& keep) {
  std::vector<int> env;
  for (int q = 0; q < n; ++q)
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) env.push_back(q);
  const int k = static_cast<int>(keep.size());
  const int e = static_cast<int>(env.size());
  const long dk = 1L << k, de = 1L << e;
  auto compose = [&](long kept_bits, long env_bits) {
    long idx = 0;
    for (int a = 0; a < k; ++a)
      if ((kept_bits >> (k - 1 - a)) & 1) idx |= 1L << (n - 1 - keep[a]);
    for (int b = 0; b < e; ++b)
      if ((env_bits >> (e - 1 - b)) & 1) idx |= 1L << (n - 1 - env[b]);
    return idx;
  };
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dk, dk);
  for (long i = 0; i < dk; ++i)
    for (long j = 0; j < dk; ++j) {
      cd s = 0;
      for (long w = 0; w < de; ++w) s += rho(compose(i, w), compose(j, w));
      out(i, j) = s;
    }
  return out;
}

// Normalized random state with normal components (Haar on the sphere).
inline Eigen::VectorXcd random_state(int n, unsigned seed) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> dist;
  Eigen::VectorXcd v(1L << n);
  for (long i = 0; i < v.size(); ++i) v(i) = cd(dist(gen), dist(gen));
  v.normalize();
  return v;
}

// Random Hermitian Pauli operator with bounded local weight.
inline wqed::PauliOperator random_operator(int n, int n_terms, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> label(0, 3);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  wqed::PauliOperator op(n);
  for (int t = 0; t < n_terms; ++t) {
    std::vector<wqed::Pauli> labels(n);
    for (int q = 0; q < n; ++q) labels[q] = static_cast<wqed::Pauli>(label(gen));
    op.add_term(coeff(gen), labels);
  }
  return op;
}

}  // namespace oracle
