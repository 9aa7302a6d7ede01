#pragma once

#include <stdexcept>
#include <string>

namespace wqed {

// Thrown when an iterative solver (Krylov propagator, Lanczos eigensolver,
// exponential fit) stops without meeting its tolerance. The message carries
// the achieved residual so callers can report it.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved_residual)
      : std::runtime_error(what), residual_(achieved_residual) {}

  double achieved_residual() const { return residual_; }

 private:
  double residual_;
};

// Thrown when an optimizer aborts (NaN cost, invalid configuration mid-run).
class OptimizationError : public std::runtime_error {
 public:
  OptimizationError(const std::string& what, int iteration)
      : std::runtime_error(what), iteration_(iteration) {}

  int iteration() const { return iteration_; }

 private:
  int iteration_;
};

}  // namespace wqed
