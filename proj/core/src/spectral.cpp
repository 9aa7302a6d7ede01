#include "wqed/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "wqed/errors.hpp"
#include "wqed/rng.hpp"

namespace wqed {

namespace {

int count_multiplet(const std::vector<double>& vals) {
  if (vals.empty()) return 0;
  int d = 1;
  while (d < static_cast<int>(vals.size()) && vals[d] <= vals[0] + kDegeneracyTol) ++d;
  return d;
}

void verify_residual(const PauliOperator& h, double val, const Eigen::VectorXcd& vec,
                     double tol) {
  Eigen::VectorXcd hv;
  h.apply(vec, hv);
  const double res = (hv - val * vec).norm();
  if (res > tol)
    throw ConvergenceError("ground_space: eigenpair residual above tolerance", res);
}

Spectrum dense_ground_space(const PauliOperator& h, int k, bool want_vectors) {
  const Eigen::MatrixXcd m = h.to_dense();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      m, want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("ground_space: dense eigensolver failed");
  Spectrum s;
  s.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + k);
  if (want_vectors) {
    for (int i = 0; i < k; ++i) {
      s.eigenvectors.push_back(solver.eigenvectors().col(i));
      verify_residual(h, s.eigenvalues[i], s.eigenvectors[i], 1e-8);
    }
  }
  s.ground_degeneracy = count_multiplet(s.eigenvalues);
  return s;
}

// One Lanczos run in the orthogonal complement of `deflate`, with full
// reorthogonalization. Returns converged Ritz pairs (ascending, contiguous
// prefix of the Ritz spectrum), at most `want` of them.
struct RitzPairs {
  std::vector<double> vals;
  std::vector<Eigen::VectorXcd> vecs;
};

RitzPairs lanczos_run(const PauliOperator& h, Eigen::VectorXcd v0, int want,
                      const std::vector<Eigen::VectorXcd>& deflate,
                      const LanczosOptions& opts, int* restarts_used) {
  const std::int64_t dim = v0.size();
  const std::int64_t free_dim = dim - static_cast<std::int64_t>(deflate.size());
  const double inner_tol = 0.1 * opts.tol;

  auto project_out = [&](Eigen::VectorXcd& w, const std::vector<Eigen::VectorXcd>& set) {
    for (const auto& u : set) w -= u.dot(w) * u;
  };

  for (int restart = 0; restart < opts.max_restarts; ++restart) {
    ++*restarts_used;
    for (int pass = 0; pass < 2; ++pass) project_out(v0, deflate);
    const double nrm = v0.norm();
    if (nrm < 1e-12)
      throw ConvergenceError("ground_space: start vector vanished after deflation", nrm);
    v0 /= nrm;

    std::vector<Eigen::VectorXcd> basis{v0};
    std::vector<double> alpha, beta;
    Eigen::VectorXcd w(dim);
    bool exhausted = false;
    const int m_max = static_cast<int>(
        std::min<std::int64_t>(free_dim, opts.max_subspace));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
    int m = 0;
    while (true) {
      // Extend the factorization by a chunk, then test Ritz convergence.
      const int target = std::min(m_max, m == 0 ? std::min(m_max, 40) : m + 40);
      while (m < target && !exhausted) {
        h.apply(basis[m], w);
        const double a = std::real(basis[m].dot(w));
        alpha.push_back(a);
        w -= a * basis[m];
        if (m > 0) w -= beta[m - 1] * basis[m - 1];
        for (int pass = 0; pass < 2; ++pass) {
          project_out(w, basis);
          project_out(w, deflate);
        }
        const double b = w.norm();
        if (b <= 1e-13 * std::max(1.0, h.coeff_norm1()) ||
            static_cast<std::int64_t>(basis.size()) == free_dim) {
          beta.push_back(0.0);
          exhausted = true;
        } else {
          beta.push_back(b);
          basis.push_back(w / b);
        }
        ++m;
      }

      Eigen::MatrixXd tmat = Eigen::MatrixXd::Zero(m, m);
      for (int i = 0; i < m; ++i) {
        tmat(i, i) = alpha[i];
        if (i + 1 < m) tmat(i, i + 1) = tmat(i + 1, i) = beta[i];
      }
      eig.compute(tmat);

      const int avail = std::min<int>(want, m);
      RitzPairs out;
      const double coupling = beta[m - 1];
      for (int i = 0; i < avail; ++i) {
        const double est = exhausted ? 0.0 : std::abs(coupling * eig.eigenvectors()(m - 1, i));
        if (est > inner_tol) break;
        Eigen::VectorXcd ritz = Eigen::VectorXcd::Zero(dim);
        for (int j = 0; j < m; ++j) ritz += eig.eigenvectors()(j, i) * basis[j];
        for (int pass = 0; pass < 2; ++pass) project_out(ritz, deflate);
        const double rn = ritz.norm();
        if (rn < 0.5) break;  // projection destroyed it; treat as unconverged
        ritz /= rn;
        Eigen::VectorXcd hv;
        h.apply(ritz, hv);
        const double lam = std::real(ritz.dot(hv));
        if ((hv - lam * ritz).norm() > opts.tol) break;
        out.vals.push_back(lam);
        out.vecs.push_back(std::move(ritz));
      }
      if (!out.vals.empty()) return out;
      if (exhausted || m >= m_max) break;  // restart from the best Ritz vector
    }

    // Implicit restart: continue from the current lowest Ritz vector.
    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(dim);
    {
      Eigen::MatrixXd tmat = Eigen::MatrixXd::Zero(m, m);
      for (int i = 0; i < m; ++i) {
        tmat(i, i) = alpha[i];
        if (i + 1 < m) tmat(i, i + 1) = tmat(i + 1, i) = beta[i];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> e2(tmat);
      for (int j = 0; j < m; ++j) next += e2.eigenvectors()(j, 0) * basis[j];
    }
    v0 = next;
  }
  throw ConvergenceError("ground_space: Lanczos restarts exhausted", -1.0);
}

Spectrum lanczos_ground_space(const PauliOperator& h, int k, bool want_vectors,
                              const LanczosOptions& opts) {
  const std::int64_t dim = std::int64_t{1} << h.n_qubits();
  std::vector<double> vals;
  std::vector<Eigen::VectorXcd> vecs;
  Rng rng(opts.seed);
  int restarts_used = 0;

  while (static_cast<int>(vals.size()) < k) {
    if (restarts_used > opts.max_restarts)
      throw ConvergenceError("ground_space: restart budget exhausted", -1.0);
    Eigen::VectorXcd v0(dim);
    for (std::int64_t i = 0; i < dim; ++i) v0[i] = {rng.normal(), rng.normal()};
    RitzPairs pairs =
        lanczos_run(h, std::move(v0), k - static_cast<int>(vals.size()), vecs, opts,
                    &restarts_used);
    for (size_t i = 0; i < pairs.vals.size(); ++i) {
      vals.push_back(pairs.vals[i]);
      vecs.push_back(std::move(pairs.vecs[i]));
    }
    if (static_cast<std::int64_t>(vals.size()) == dim) break;
  }

  // Deflation returns eigenvalues in discovery order; sort jointly.
  std::vector<int> order(vals.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
  Spectrum s;
  for (int idx : order) {
    if (static_cast<int>(s.eigenvalues.size()) == k) break;
    s.eigenvalues.push_back(vals[idx]);
    if (want_vectors) s.eigenvectors.push_back(std::move(vecs[idx]));
  }
  s.ground_degeneracy = count_multiplet(s.eigenvalues);
  return s;
}

}  // namespace

Spectrum ground_space(const PauliOperator& h, int k, EigMethod method,
                      bool want_vectors, const LanczosOptions& opts) {
  const std::int64_t dim = std::int64_t{1} << h.n_qubits();
  if (k < 1 || k > dim) throw std::invalid_argument("ground_space: bad k");
  if (method == EigMethod::AUTO)
    method = (dim <= 4096) ? EigMethod::DENSE : EigMethod::LANCZOS;
  if (method == EigMethod::DENSE) {
    if (h.n_qubits() > 12)
      throw std::invalid_argument("ground_space: dense path capped at 12 qubits");
    return dense_ground_space(h, k, want_vectors);
  }
  return lanczos_ground_space(h, k, want_vectors, opts);
}

Spectrum ground_space_complete(const PauliOperator& h, EigMethod method,
                               bool want_vectors, const LanczosOptions& opts) {
  const std::int64_t dim = std::int64_t{1} << h.n_qubits();
  int k = std::min<std::int64_t>(dim, 4);
  while (true) {
    Spectrum s = ground_space(h, k, method, want_vectors, opts);
    if (s.ground_degeneracy < k || k == dim) return s;
    k = static_cast<int>(std::min<std::int64_t>(dim, std::int64_t{k} * 2));
  }
}

double gap_above_ground(const PauliOperator& h, EigMethod method,
                        const LanczosOptions& opts) {
  Spectrum s = ground_space_complete(h, method, /*want_vectors=*/false, opts);
  if (s.ground_degeneracy == static_cast<int>(s.eigenvalues.size()))
    throw std::runtime_error("gap_above_ground: spectrum is fully degenerate");
  return s.eigenvalues[s.ground_degeneracy] - s.eigenvalues[0];
}

std::vector<double> dense_spectrum(const PauliOperator& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.to_dense(),
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("dense_spectrum: eigensolver failed");
  return {solver.eigenvalues().data(),
          solver.eigenvalues().data() + solver.eigenvalues().size()};
}

std::pair<double, double> spectral_extent(const PauliOperator& h, EigMethod method) {
  if ((method == EigMethod::AUTO && h.n_qubits() <= 12) || method == EigMethod::DENSE) {
    const std::vector<double> all = dense_spectrum(h);
    return {all.front(), all.back()};
  }
  const double lo = ground_space(h, 1, method, false).eigenvalues[0];
  PauliOperator neg = h;
  neg.scale(-1.0);
  const double hi = -ground_space(neg, 1, method, false).eigenvalues[0];
  return {lo, hi};
}

}  // namespace wqed
