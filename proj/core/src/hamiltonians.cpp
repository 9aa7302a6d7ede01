#include "wqed/hamiltonians.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wqed {

namespace {

void check_chain(int n) {
  if (n < 2) throw std::invalid_argument("chain models need at least 2 qubits");
}

int n_bonds(int n, Boundary bc) { return bc == Boundary::PERIODIC ? n : n - 1; }

}  // namespace

PauliOperator build_xxz(int n, double delta, Boundary bc) {
  check_chain(n);
  PauliOperator h(n);
  for (int b = 0; b < n_bonds(n, bc); ++b) {
    const int i = b, j = (b + 1) % n;
    h.add_term(1.0, {{i, Pauli::X}, {j, Pauli::X}});
    h.add_term(1.0, {{i, Pauli::Y}, {j, Pauli::Y}});
    h.add_term(-delta, {{i, Pauli::Z}, {j, Pauli::Z}});
  }
  return h;
}

PauliOperator build_tfim(int n, double g, Boundary bc) {
  check_chain(n);
  PauliOperator h(n);
  for (int b = 0; b < n_bonds(n, bc); ++b)
    h.add_term(-1.0, {{b, Pauli::X}, {(b + 1) % n, Pauli::X}});
  for (int i = 0; i < n; ++i) h.add_term(g, {{i, Pauli::Z}});
  return h;
}

PauliOperator build_lrtfim(int n, double alpha, double theta) {
  check_chain(n);
  if (alpha <= 0.0) throw std::invalid_argument("build_lrtfim: alpha must be positive");
  PauliOperator h(n);
  const double sin_t = std::sin(theta), cos_t = std::cos(theta);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      h.add_term(-2.0 * sin_t * std::pow(static_cast<double>(j - i), -alpha),
                 {{i, Pauli::X}, {j, Pauli::X}});
  for (int i = 0; i < n; ++i) h.add_term(cos_t, {{i, Pauli::Z}});
  return h;
}

PauliOperator build_wqed_xx(int n, double j, double l) {
  check_chain(n);
  if (l <= 0.0) throw std::invalid_argument("build_wqed_xx: range L must be positive");
  PauliOperator h(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const double w = 0.5 * j * std::exp(-static_cast<double>(b - a) / l);
      h.add_term(w, {{a, Pauli::X}, {b, Pauli::X}});
      h.add_term(w, {{a, Pauli::Y}, {b, Pauli::Y}});
    }
  return h;
}

PauliOperator build_wqed_ising(int n, double j, double l) {
  check_chain(n);
  if (l <= 0.0) throw std::invalid_argument("build_wqed_ising: range L must be positive");
  PauliOperator h(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      h.add_term(2.0 * j * std::exp(-static_cast<double>(b - a) / l),
                 {{a, Pauli::X}, {b, Pauli::X}});
  return h;
}

PauliOperator build_ata_xx(int n, double j) {
  check_chain(n);
  PauliOperator h(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      h.add_term(0.5 * j, {{a, Pauli::X}, {b, Pauli::X}});
      h.add_term(0.5 * j, {{a, Pauli::Y}, {b, Pauli::Y}});
    }
  return h;
}

PauliOperator build_ata_ising(int n, double j) {
  check_chain(n);
  PauliOperator h(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) h.add_term(2.0 * j, {{a, Pauli::X}, {b, Pauli::X}});
  return h;
}

PauliOperator sum_z(int n) {
  PauliOperator h(n);
  for (int i = 0; i < n; ++i) h.add_term(1.0, {{i, Pauli::Z}});
  return h;
}

PauliOperator sum_zz(int n, Boundary bc) {
  check_chain(n);
  PauliOperator h(n);
  for (int b = 0; b < n_bonds(n, bc); ++b)
    h.add_term(1.0, {{b, Pauli::Z}, {(b + 1) % n, Pauli::Z}});
  return h;
}

PauliOperator sum_xx_nn(int n, Boundary bc) {
  check_chain(n);
  PauliOperator h(n);
  for (int b = 0; b < n_bonds(n, bc); ++b)
    h.add_term(1.0, {{b, Pauli::X}, {(b + 1) % n, Pauli::X}});
  return h;
}

PauliOperator build_cost(double s, const PauliOperator& h0,
                         const PauliOperator& htarget) {
  if (s < 0.0 || s > 1.0) throw std::invalid_argument("build_cost: s outside [0, 1]");
  if (h0.n_qubits() != htarget.n_qubits())
    throw std::invalid_argument("build_cost: qubit counts differ");
  PauliOperator h = (1.0 - s) * h0;
  h += s * htarget;
  return h;
}

double critical_theta(int n, double alpha, double grid_step) {
  check_chain(n);
  if (grid_step <= 0.0 || grid_step >= 1.0)
    throw std::invalid_argument("critical_theta: bad grid step");
  const double threshold = 1.0 / (static_cast<double>(n) * n);
  for (int k = 1;; ++k) {
    const double theta = k * grid_step;
    if (theta >= std::numbers::pi / 2)
      throw std::runtime_error(
          "critical_theta: grid exhausted without gap < 1/n^2 (alpha=" +
          std::to_string(alpha) + ")");
    if (gap_above_ground(build_lrtfim(n, alpha, theta)) < threshold) return theta;
  }
}

PauliOperator build_model(const ModelSpec& spec) {
  switch (spec.kind) {
    case ModelKind::XXZ:
      return build_xxz(spec.n_qubits, spec.delta, spec.boundary);
    case ModelKind::TFIM:
      return build_tfim(spec.n_qubits, spec.g, spec.boundary);
    case ModelKind::LRTFIM: {
      const double theta = spec.theta >= 0.0
                               ? spec.theta
                               : critical_theta(spec.n_qubits, spec.alpha);
      return build_lrtfim(spec.n_qubits, spec.alpha, theta);
    }
  }
  throw std::invalid_argument("build_model: unknown model kind");
}

PauliOperator build_h0(const ModelSpec& spec) {
  if (spec.kind == ModelKind::XXZ) return sum_zz(spec.n_qubits, spec.boundary);
  return sum_z(spec.n_qubits);
}

InitialState model_initial_state(ModelKind kind) {
  return kind == ModelKind::XXZ ? InitialState::NEEL : InitialState::ALL_DOWN;
}

std::string model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::XXZ: return "xxz";
    case ModelKind::TFIM: return "tfim";
    case ModelKind::LRTFIM: return "lrtfim";
  }
  return "?";
}

ModelKind model_kind_from_name(const std::string& name) {
  if (name == "xxz") return ModelKind::XXZ;
  if (name == "tfim") return ModelKind::TFIM;
  if (name == "lrtfim") return ModelKind::LRTFIM;
  throw std::invalid_argument("unknown model kind: " + name);
}

}  // namespace wqed
