#include "wqed/expfit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

namespace wqed {

namespace {

// Weighted linear subproblem: for fixed ranges, the best amplitudes solve a
// small least-squares system in the relative metric. Returns the summed
// squared relative residual.
struct LinearFit {
  Eigen::VectorXd j;
  double ssq = 0.0;
};

LinearFit solve_amplitudes(const std::vector<double>& targets,
                           const std::vector<double>& ls) {
  const int rows = static_cast<int>(targets.size());
  const int cols = static_cast<int>(ls.size());
  Eigen::MatrixXd a(rows, cols);
  Eigen::VectorXd b = Eigen::VectorXd::Ones(rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      a(r, c) = std::exp(-static_cast<double>(r + 1) / ls[c]) / targets[r];
  LinearFit fit;
  fit.j = a.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);
  fit.ssq = (a * fit.j - b).squaredNorm();
  return fit;
}

double objective(const std::vector<double>& targets, const Eigen::VectorXd& log_ls) {
  std::vector<double> ls(log_ls.size());
  for (Eigen::Index i = 0; i < log_ls.size(); ++i) ls[i] = std::exp(log_ls[i]);
  return solve_amplitudes(targets, ls).ssq;
}

// Plain Nelder-Mead on the log-range coordinates.
Eigen::VectorXd nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                            Eigen::VectorXd x0, double step, int max_iters) {
  const int n = static_cast<int>(x0.size());
  std::vector<Eigen::VectorXd> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  for (int i = 0; i < n; ++i) pts[i + 1][i] += step;
  for (int i = 0; i <= n; ++i) vals[i] = f(pts[i]);

  for (int it = 0; it < max_iters; ++it) {
    std::vector<int> order(n + 1);
    for (int i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
    std::vector<Eigen::VectorXd> p2(n + 1);
    std::vector<double> v2(n + 1);
    for (int i = 0; i <= n; ++i) {
      p2[i] = pts[order[i]];
      v2[i] = vals[order[i]];
    }
    pts.swap(p2);
    vals.swap(v2);

    double spread = 0.0;
    for (int i = 1; i <= n; ++i) spread = std::max(spread, (pts[i] - pts[0]).norm());
    if (spread < 1e-12 && std::abs(vals[n] - vals[0]) < 1e-15) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) centroid += pts[i];
    centroid /= n;

    const Eigen::VectorXd refl = centroid + (centroid - pts[n]);
    const double f_refl = f(refl);
    if (f_refl < vals[0]) {
      const Eigen::VectorXd expd = centroid + 2.0 * (centroid - pts[n]);
      const double f_expd = f(expd);
      if (f_expd < f_refl) {
        pts[n] = expd;
        vals[n] = f_expd;
      } else {
        pts[n] = refl;
        vals[n] = f_refl;
      }
    } else if (f_refl < vals[n - 1]) {
      pts[n] = refl;
      vals[n] = f_refl;
    } else {
      const Eigen::VectorXd contr = centroid + 0.5 * (pts[n] - centroid);
      const double f_contr = f(contr);
      if (f_contr < vals[n]) {
        pts[n] = contr;
        vals[n] = f_contr;
      } else {
        for (int i = 1; i <= n; ++i) {
          pts[i] = pts[0] + 0.5 * (pts[i] - pts[0]);
          vals[i] = f(pts[i]);
        }
      }
    }
  }
  int best = 0;
  for (int i = 1; i <= n; ++i)
    if (vals[i] < vals[best]) best = i;
  return pts[best];
}

}  // namespace

ExpFitResult fit_exponential_sum(const std::vector<double>& targets, int n_exp) {
  const int r_max = static_cast<int>(targets.size());
  if (n_exp < 1) throw std::invalid_argument("fit_exponential_sum: n_exp must be >= 1");
  if (r_max < 2 * n_exp)
    throw std::invalid_argument("fit_exponential_sum: need at least 2*n_exp points");
  for (double t : targets)
    if (!(t > 0.0))
      throw std::invalid_argument("fit_exponential_sum: targets must be positive");

  // Global stage: log-spaced range grid, all sorted index combinations.
  const int grid_size = 48;
  std::vector<double> grid(grid_size);
  const double lo = std::log(0.05), hi = std::log(3.0 * r_max);
  for (int i = 0; i < grid_size; ++i)
    grid[i] = std::exp(lo + (hi - lo) * i / (grid_size - 1));

  std::vector<int> combo(n_exp);
  for (int i = 0; i < n_exp; ++i) combo[i] = i;
  std::vector<double> best_ls(grid.begin(), grid.begin() + n_exp);
  double best_ssq = std::numeric_limits<double>::infinity();
  while (true) {
    std::vector<double> ls(n_exp);
    for (int i = 0; i < n_exp; ++i) ls[i] = grid[combo[i]];
    const double ssq = solve_amplitudes(targets, ls).ssq;
    if (ssq < best_ssq) {
      best_ssq = ssq;
      best_ls = ls;
    }
    int pos = n_exp - 1;
    while (pos >= 0 && combo[pos] == grid_size - n_exp + pos) --pos;
    if (pos < 0) break;
    ++combo[pos];
    for (int i = pos + 1; i < n_exp; ++i) combo[i] = combo[i - 1] + 1;
  }

  // Local stage: Nelder-Mead in log-range space from the grid optimum.
  Eigen::VectorXd x0(n_exp);
  for (int i = 0; i < n_exp; ++i) x0[i] = std::log(best_ls[i]);
  const Eigen::VectorXd x =
      nelder_mead([&](const Eigen::VectorXd& v) { return objective(targets, v); }, x0,
                  0.05, 4000);

  std::vector<double> ls(n_exp);
  for (int i = 0; i < n_exp; ++i) ls[i] = std::exp(x[i]);
  const LinearFit fit = solve_amplitudes(targets, ls);

  ExpFitResult result;
  for (int i = 0; i < n_exp; ++i) result.terms.push_back({fit.j[i], ls[i]});
  std::sort(result.terms.begin(), result.terms.end(),
            [](const ExpFitTerm& a, const ExpFitTerm& b) { return a.l > b.l; });
  for (int r = 1; r <= r_max; ++r) {
    double model = 0.0;
    for (const auto& term : result.terms) model += term.j * std::exp(-r / term.l);
    result.max_rel_residual = std::max(
        result.max_rel_residual, std::abs(model - targets[r - 1]) / targets[r - 1]);
  }
  return result;
}

ExpFitResult fit_powerlaw(double alpha, int r_max, int n_exp) {
  if (r_max < 1) throw std::invalid_argument("fit_powerlaw: r_max must be >= 1");
  std::vector<double> targets(r_max);
  for (int r = 1; r <= r_max; ++r) targets[r - 1] = std::pow(static_cast<double>(r), -alpha);
  return fit_exponential_sum(targets, n_exp);
}

}  // namespace wqed
