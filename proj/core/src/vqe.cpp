#include "wqed/vqe.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wqed/errors.hpp"
#include "wqed/hamiltonians.hpp"
#include "wqed/rng.hpp"

namespace wqed {

double cost(const Circuit& circuit, const Eigen::VectorXd& params, const PauliOperator& h,
            const ExpmOptions& expm) {
  if (h.n_qubits() != circuit.n_qubits)
    throw std::invalid_argument("cost: operator and circuit qubit counts differ");
  const StateVector psi = apply_circuit(circuit, params, expm);
  return h.expectation(psi.amps);
}

Eigen::VectorXd finite_difference_gradient(const Circuit& circuit, const CostFn& cost_fn,
                                           const Eigen::VectorXd& params, double step) {
  if (step <= 0) throw std::invalid_argument("gradient: step must be positive");
  if (params.size() != circuit.n_params())
    throw std::invalid_argument("gradient: parameter count mismatch");
  Eigen::VectorXd g = Eigen::VectorXd::Zero(params.size());
  Eigen::VectorXd p = params;
  for (int k = 0; k < circuit.n_params(); ++k) {
    if (circuit.slots[k].frozen) continue;
    const double saved = p[k];
    p[k] = saved + step;
    const double plus = cost_fn(p);
    p[k] = saved - step;
    const double minus = cost_fn(p);
    p[k] = saved;
    g[k] = (plus - minus) / (2.0 * step);
  }
  return g;
}

Eigen::VectorXd gradient(const Circuit& circuit, const Eigen::VectorXd& params,
                         const PauliOperator& h, double step, const ExpmOptions& expm) {
  return finite_difference_gradient(
      circuit, [&](const Eigen::VectorXd& p) { return cost(circuit, p, h, expm); }, params,
      step);
}

AdamResult adam_minimize_fn(const CostFn& cost_fn, const GradFn& grad_fn,
                            Eigen::VectorXd init, const OptimizerConfig& cfg) {
  if (cfg.learning_rate <= 0 || cfg.cost_tol <= 0 || cfg.grad_step <= 0)
    throw std::invalid_argument("adam: learning_rate, cost_tol and grad_step must be positive");
  if (cfg.max_iters < 1) throw std::invalid_argument("adam: max_iters must be >= 1");

  const Eigen::Index dim = init.size();
  Eigen::VectorXd theta = std::move(init);
  Eigen::VectorXd m = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);

  double prev = cost_fn(theta);
  if (!std::isfinite(prev)) throw OptimizationError("adam: non-finite initial cost", 0);

  AdamResult best{theta, prev, 0};
  double b1k = 1.0, b2k = 1.0;  // running beta powers for bias correction
  for (int k = 1; k <= cfg.max_iters; ++k) {
    const Eigen::VectorXd g = grad_fn(theta);
    m = cfg.beta1 * m + (1.0 - cfg.beta1) * g;
    v = cfg.beta2 * v + (1.0 - cfg.beta2) * g.cwiseProduct(g);
    b1k *= cfg.beta1;
    b2k *= cfg.beta2;
    const double corr = 1.0 / (1.0 - b1k);
    const Eigen::VectorXd vhat = v / (1.0 - b2k);
    theta -= cfg.learning_rate * corr *
             m.cwiseQuotient(vhat.cwiseSqrt() + Eigen::VectorXd::Constant(dim, cfg.eps));
    const double c = cost_fn(theta);
    if (!std::isfinite(c))
      throw OptimizationError("adam: cost became non-finite", k);
    best.iters = k;
    if (c < best.energy) {
      best.energy = c;
      best.params = theta;
    }
    if (std::abs(c - prev) < cfg.cost_tol) break;
    prev = c;
  }
  return best;
}

AdamResult adam_minimize(const Circuit& circuit, const PauliOperator& h,
                         const Eigen::VectorXd& init, const OptimizerConfig& cfg,
                         const ExpmOptions& expm) {
  const CostFn cf = [&](const Eigen::VectorXd& p) { return cost(circuit, p, h, expm); };
  const GradFn gf = [&](const Eigen::VectorXd& p) {
    return gradient(circuit, p, h, cfg.grad_step, expm);
  };
  return adam_minimize_fn(cf, gf, init, cfg);
}

Eigen::VectorXd draw_initial_params(const Circuit& circuit, std::uint64_t seed) {
  Rng rng(seed, /*stream=*/0);
  std::map<int, double> group_draws;
  Eigen::VectorXd p(circuit.n_params());
  for (int k = 0; k < circuit.n_params(); ++k) {
    const SlotInfo& slot = circuit.slots[k];
    switch (slot.init) {
      case SlotInit::RANDOM_SMALL:
        p[k] = 0.01 * rng.uniform(2.0 * std::numbers::pi);
        break;
      case SlotInit::CONSTANT:
        p[k] = slot.value;
        break;
      case SlotInit::SCALED_GROUP: {
        auto it = group_draws.find(slot.group);
        if (it == group_draws.end())
          it = group_draws.emplace(slot.group, 0.01 * rng.uniform(2.0 * std::numbers::pi)).first;
        p[k] = slot.value * it->second;
        break;
      }
    }
  }
  return p;
}

namespace {

std::vector<double> schedule_points(const Schedule& sched, int n_qubits) {
  if (sched.s_start < 0 || sched.s_end > 1 || sched.s_start > sched.s_end)
    throw std::invalid_argument("schedule: need 0 <= s_start <= s_end <= 1");
  const double step = sched.delta_s > 0 ? sched.delta_s : 1.0 / (5.0 * n_qubits);
  std::vector<double> pts;
  double s = sched.s_start;
  while (s < sched.s_end - 1e-12) {
    pts.push_back(s);
    s += step;
  }
  pts.push_back(sched.s_end);  // final step clipped exactly
  return pts;
}

}  // namespace

RunRecord aavqe(const ModelSpec& model, const PauliOperator& h0, const PauliOperator& htarget,
                const Circuit& circuit, const Schedule& schedule, const OptimizerConfig& cfg,
                std::uint64_t seed, const ExpmOptions& expm) {
  if (h0.n_qubits() != circuit.n_qubits || htarget.n_qubits() != circuit.n_qubits)
    throw std::invalid_argument("aavqe: operator and circuit qubit counts differ");

  RunRecord record;
  record.ansatz_id = circuit.ansatz_id;
  record.n_qubits = circuit.n_qubits;
  record.depth = circuit.depth;
  record.model = model;
  record.seed = seed;

  const auto t0 = std::chrono::steady_clock::now();
  Eigen::VectorXd params = draw_initial_params(circuit, seed);
  for (const double s : schedule_points(schedule, circuit.n_qubits)) {
    const PauliOperator hs = build_cost(s, h0, htarget);
    StepRecord step;
    step.s = s;
    step.init_params = params;
    try {
      const AdamResult r = adam_minimize(circuit, hs, params, cfg, expm);
      step.best_params = r.params;
      step.best_energy = r.energy;
      step.iters = r.iters;
    } catch (const std::exception& e) {
      record.failed = true;
      record.fail_reason = "s=" + std::to_string(s) + ": " + e.what();
      record.steps.push_back(std::move(step));
      break;
    }
    params = step.best_params;
    record.steps.push_back(std::move(step));
  }
  if (!record.failed && !record.steps.empty()) record.energy = record.steps.back().best_energy;
  record.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return record;
}

}  // namespace wqed
