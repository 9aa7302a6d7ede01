#include "wqed/krylov.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "wqed/errors.hpp"

namespace wqed {

namespace {

using cd = std::complex<double>;

// exp(-i s T) e1 for the (real symmetric tridiagonal) projected matrix given
// by its eigendecomposition T = Q diag(lam) Q^T.
Eigen::VectorXcd small_exp_e1(const Eigen::MatrixXd& q, const Eigen::VectorXd& lam,
                              double s) {
  const Eigen::VectorXd q1 = q.row(0).transpose();
  Eigen::VectorXcd y(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i)
    y[i] = std::polar(q1[i], -s * lam[i]);
  return q * y;
}

}  // namespace

void expm_apply(const PauliOperator& h, Eigen::VectorXcd& v, double t,
                const ExpmOptions& opts) {
  const std::int64_t dim = std::int64_t{1} << h.n_qubits();
  if (v.size() != dim)
    throw std::invalid_argument("expm_apply: state dimension mismatch");
  if (opts.krylov_start < 2 || opts.krylov_max < opts.krylov_start)
    throw std::invalid_argument("expm_apply: bad Krylov dimensions");
  if (t == 0.0 || h.n_terms() == 0) return;

  const double total = std::abs(t);
  const double sgn = (t > 0.0) ? 1.0 : -1.0;
  const double breakdown_eps = 1e-13 * std::max(1.0, h.coeff_norm1());

  Eigen::VectorXcd w_work(dim);
  double remaining = total;
  double last_est = 0.0;
  int substeps = 0;

  while (remaining > 0.0) {
    if (++substeps > opts.max_substeps)
      throw ConvergenceError("expm_apply: substep budget exhausted", last_est);

    const double beta0 = v.norm();
    if (beta0 == 0.0) return;

    std::vector<Eigen::VectorXcd> basis;
    std::vector<double> alpha, beta;  // beta[j] couples v_j to v_{j+1}
    basis.push_back(v / beta0);
    bool exact = false;
    int m = 0;  // processed Lanczos steps == usable subspace size

    auto step = [&]() {
      h.apply(basis[m], w_work);
      const double a = std::real(basis[m].dot(w_work));
      alpha.push_back(a);
      w_work -= a * basis[m];
      if (m > 0) w_work -= beta[m - 1] * basis[m - 1];
      // Full reorthogonalization, two passes for safety.
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& u : basis) w_work -= u.dot(w_work) * u;
      const double b = w_work.norm();
      if (b <= breakdown_eps || static_cast<std::int64_t>(basis.size()) == dim) {
        beta.push_back(0.0);
        exact = true;
      } else {
        beta.push_back(b);
        basis.push_back(w_work / b);
      }
      ++m;
    };
    auto ensure = [&](int target) {
      while (m < target && !exact) step();
    };

    ensure(opts.krylov_start);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
    int decomposed_m = -1;
    auto decompose = [&]() {
      Eigen::MatrixXd tmat = Eigen::MatrixXd::Zero(m, m);
      for (int i = 0; i < m; ++i) {
        tmat(i, i) = alpha[i];
        if (i + 1 < m) tmat(i, i + 1) = tmat(i + 1, i) = beta[i];
      }
      eig.compute(tmat);
      decomposed_m = m;
    };

    double dt = remaining;
    while (true) {
      if (decomposed_m != m) decompose();
      const double coupling = beta[m - 1];
      double est = 0.0;
      if (!exact) {
        const Eigen::VectorXcd w_full =
            small_exp_e1(eig.eigenvectors(), eig.eigenvalues(), sgn * dt);
        const Eigen::VectorXcd w_half =
            small_exp_e1(eig.eigenvectors(), eig.eigenvalues(), sgn * dt * 0.5);
        est = 2.0 * dt * coupling *
              std::max(std::abs(w_full[m - 1]), std::abs(w_half[m - 1]));
      }
      last_est = est;
      if (exact || est <= opts.tol * (dt / total)) {
        const Eigen::VectorXcd w =
            small_exp_e1(eig.eigenvectors(), eig.eigenvalues(), sgn * dt);
        v.setZero();
        for (int j = 0; j < m; ++j) v += w[j] * basis[j];
        v *= beta0;
        remaining -= dt;
        break;
      }
      if (m < opts.krylov_max) {
        ensure(std::min(m + 10, opts.krylov_max));
        continue;
      }
      dt *= 0.5;
      if (dt < total * 1e-15)
        throw ConvergenceError("expm_apply: time step underflow before reaching tol",
                               last_est);
    }
  }
}

void expm_apply(const PauliOperator& h, StateVector& psi, double t,
                const ExpmOptions& opts) {
  if (psi.n_qubits != h.n_qubits())
    throw std::invalid_argument("expm_apply: qubit count mismatch");
  expm_apply(h, psi.amps, t, opts);
}

}  // namespace wqed
