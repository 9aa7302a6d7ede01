#pragma once

#include <vector>

namespace wqed {

struct ExpFitTerm {
  double j = 0.0;  // amplitude
  double l = 0.0;  // range, always > 0
};

struct ExpFitResult {
  std::vector<ExpFitTerm> terms;  // sorted by l descending
  double max_rel_residual = 0.0;  // max_r |model(r) - target(r)| / target(r)
};

/// Least-squares fit of sum_l J_l e^{-r/L_l} to strictly positive targets at
/// integer r = 1..targets.size(), minimizing the relative residual. The L
/// values are located by a global grid search followed by a Nelder-Mead
/// refinement in log space; amplitudes come from the projected linear
/// subproblem. Deterministic.
ExpFitResult fit_exponential_sum(const std::vector<double>& targets, int n_exp);

/// Convenience wrapper with targets 1/r^alpha for r = 1..r_max.
ExpFitResult fit_powerlaw(double alpha, int r_max, int n_exp);

}  // namespace wqed
