#pragma once

#include "wqed/pauli.hpp"
#include "wqed/state.hpp"

namespace wqed {

struct ExpmOptions {
  double tol = 1e-10;     // error budget for the whole evolution
  int krylov_start = 10;  // initial subspace dimension
  int krylov_max = 60;    // grown adaptively up to this bound
  int max_substeps = 1000;
};

/// psi <- exp(-i t h) psi via a Lanczos-Krylov projection with full
/// reorthogonalization. The subspace is grown from krylov_start towards
/// krylov_max; if the local error estimate still exceeds the per-substep
/// budget the time step is halved (time-substepping). Throws
/// ConvergenceError if the budget cannot be met within max_substeps.
void expm_apply(const PauliOperator& h, StateVector& psi, double t,
                const ExpmOptions& opts = {});

/// Same propagator applied to a raw coefficient vector (used for
/// density-matrix columns).
void expm_apply(const PauliOperator& h, Eigen::VectorXcd& v, double t,
                const ExpmOptions& opts = {});

}  // namespace wqed
