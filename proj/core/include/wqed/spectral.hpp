#pragma once

#include <vector>

#include "wqed/pauli.hpp"

namespace wqed {

// Eigenvalues within kDegeneracyTol of the lowest one count as one ground
// multiplet everywhere in the toolkit.
inline constexpr double kDegeneracyTol = 1e-8;

struct Spectrum {
  std::vector<double> eigenvalues;             // ascending
  std::vector<Eigen::VectorXcd> eigenvectors;  // matching order; may be empty
  int ground_degeneracy = 0;  // multiplet size among the returned eigenvalues
};

enum class EigMethod {
  AUTO,     // dense when 2^n <= 4096, Lanczos otherwise
  DENSE,    // full diagonalization of the dense matrix
  LANCZOS,  // restarted Lanczos with full reorthogonalization and deflation
};

struct LanczosOptions {
  int max_subspace = 400;
  int max_restarts = 200;
  double tol = 1e-8;  // max ||H v - E v|| accepted for an eigenpair
  std::uint64_t seed = 0x5eedull;
};

/// Lowest k eigenpairs of a Hermitian Pauli-sum operator. Every returned
/// eigenpair satisfies ||H v - E v|| <= 1e-8 (verified with an explicit
/// matvec) and the eigenvectors are orthonormal. Throws ConvergenceError if
/// the iterative path stalls.
Spectrum ground_space(const PauliOperator& h, int k, EigMethod method = EigMethod::AUTO,
                      bool want_vectors = true, const LanczosOptions& opts = {});

/// Like ground_space, but grows k until the ground multiplet is complete,
/// i.e. at least one returned eigenvalue sits above E0 + kDegeneracyTol (or
/// the full space is exhausted). The returned ground_degeneracy is then the
/// true multiplet size.
Spectrum ground_space_complete(const PauliOperator& h, EigMethod method = EigMethod::AUTO,
                               bool want_vectors = true, const LanczosOptions& opts = {});

/// Energy gap from the ground multiplet to the first level above it.
double gap_above_ground(const PauliOperator& h, EigMethod method = EigMethod::AUTO,
                        const LanczosOptions& opts = {});

/// All 2^n eigenvalues, ascending (dense path only, n <= 12).
std::vector<double> dense_spectrum(const PauliOperator& h);

/// Extreme eigenvalues (E_min, E_max) via whichever path fits the size.
std::pair<double, double> spectral_extent(const PauliOperator& h,
                                          EigMethod method = EigMethod::AUTO);

}  // namespace wqed
