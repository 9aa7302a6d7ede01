#include "wqed/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wqed/gates.hpp"
#include "wqed/hamiltonians.hpp"

namespace wqed {

namespace {

double slot_value(const Circuit& c, const Gate& g, size_t use_index,
                  const Eigen::VectorXd& params) {
  const int slot = g.slots[use_index];
  double v = params[slot];
  if (!g.slot_scales.empty()) v *= g.slot_scales[use_index];
  if (c.slots[slot].is_range) v = std::max(v, kRangeFloor);
  return v;
}

int pauli_code(Pauli p) { return static_cast<int>(p); }

// exp(-i theta G) for a commuting generator of <=2-local strings, as a
// product of elementary rotations (exact because the terms commute).
void factorize_generator(const PauliOperator& gen, double theta,
                         std::vector<GateFactor>& out) {
  for (const auto& term : gen.terms()) {
    std::vector<std::pair<int, Pauli>> sites;
    const auto labels = gen.term_labels(term);
    for (int q = 0; q < gen.n_qubits(); ++q)
      if (labels[q] != Pauli::I) sites.emplace_back(q, labels[q]);
    const double angle = theta * term.coeff;
    GateFactor f;
    if (sites.empty()) continue;  // identity term: global phase only
    if (sites.size() == 1) {
      f.q1 = sites[0].first;
      switch (sites[0].second) {
        case Pauli::X: f.u2 = rot_x(angle); break;
        case Pauli::Y: f.u2 = rot_y(angle); break;
        default: f.u2 = rot_z(angle); break;
      }
    } else {
      f.q1 = sites[0].first;
      f.q2 = sites[1].first;
      f.u4 = pair_rotation(pauli_code(sites[0].second), pauli_code(sites[1].second),
                           angle);
    }
    out.push_back(std::move(f));
  }
}

}  // namespace

GateAction gate_action(const Circuit& c, int gate_index,
                       const Eigen::VectorXd& params) {
  const Gate& g = c.gates[gate_index];
  GateAction action;
  switch (g.kind) {
    case GateKind::ROT_X:
    case GateKind::ROT_Y:
    case GateKind::ROT_Z: {
      const double theta = slot_value(c, g, 0, params);
      GateFactor f;
      f.q1 = g.qubits[0];
      f.u2 = g.kind == GateKind::ROT_X   ? rot_x(theta)
             : g.kind == GateKind::ROT_Y ? rot_y(theta)
                                         : rot_z(theta);
      action.factors.push_back(std::move(f));
      break;
    }
    case GateKind::GLOBAL_ROT_Z: {
      const double theta = slot_value(c, g, 0, params);
      for (int q : g.qubits) {
        GateFactor f;
        f.q1 = q;
        f.u2 = rot_z(theta);
        action.factors.push_back(std::move(f));
      }
      break;
    }
    case GateKind::CZ: {
      GateFactor f;
      f.q1 = g.qubits[0];
      f.q2 = g.qubits[1];
      f.u4 = cz_matrix();
      action.factors.push_back(std::move(f));
      break;
    }
    case GateKind::PAIR_XX: {
      GateFactor f;
      f.q1 = g.qubits[0];
      f.q2 = g.qubits[1];
      f.u4 = pair_xx(slot_value(c, g, 0, params));
      action.factors.push_back(std::move(f));
      break;
    }
    case GateKind::WQED_I: {
      // All strings are X-type and commute, so the evolution splits exactly
      // into pairwise exp(-i phi XX) with phi = 2 T e^{-|i-j|/L}.
      const double t = slot_value(c, g, 0, params);
      const double l = slot_value(c, g, 1, params);
      const int n = c.n_qubits;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          GateFactor f;
          f.q1 = a;
          f.q2 = b;
          f.u4 = pair_xx(2.0 * t * std::exp(-static_cast<double>(b - a) / l));
          action.factors.push_back(std::move(f));
        }
      break;
    }
    case GateKind::WQED_XX: {
      const double t = slot_value(c, g, 0, params);
      const double l = slot_value(c, g, 1, params);
      action.generator =
          std::make_shared<PauliOperator>(build_wqed_xx(c.n_qubits, 1.0, l));
      action.time = t;
      break;
    }
    case GateKind::HVA_TERM: {
      const double theta = slot_value(c, g, 0, params);
      if (!g.generator) throw std::logic_error("HVA_TERM gate without generator");
      if (g.factorizable) {
        factorize_generator(*g.generator, theta, action.factors);
      } else {
        action.generator = g.generator;
        action.time = theta;
      }
      break;
    }
  }
  return action;
}

void apply_circuit_inplace(const Circuit& c, const Eigen::VectorXd& params,
                           StateVector& psi, const ExpmOptions& expm) {
  if (params.size() != c.n_params())
    throw std::invalid_argument("apply_circuit: parameter count mismatch");
  if (psi.n_qubits != c.n_qubits)
    throw std::invalid_argument("apply_circuit: qubit count mismatch");
  for (int i = 0; i < static_cast<int>(c.gates.size()); ++i) {
    GateAction action = gate_action(c, i, params);
    if (action.generator) {
      expm_apply(*action.generator, psi, action.time, expm);
      continue;
    }
    for (const GateFactor& f : action.factors) {
      if (f.q2 < 0)
        apply_single_qubit(psi, f.q1, f.u2);
      else
        apply_two_qubit(psi, f.q1, f.q2, f.u4);
    }
  }
}

StateVector apply_circuit(const Circuit& c, const Eigen::VectorXd& params,
                          const ExpmOptions& expm) {
  StateVector psi = prepare_initial_state(c.n_qubits, c.initial_state);
  apply_circuit_inplace(c, params, psi, expm);
  return psi;
}

void validate_circuit(const Circuit& c) {
  if (c.n_qubits < 1) throw std::logic_error("circuit: bad qubit count");
  std::vector<bool> used(c.slots.size(), false);
  for (const auto& g : c.gates) {
    if (!g.slot_scales.empty() && g.slot_scales.size() != g.slots.size())
      throw std::logic_error("circuit: slot_scales length mismatch");
    for (int s : g.slots) {
      if (s < 0 || s >= c.n_params()) throw std::logic_error("circuit: slot out of range");
      used[s] = true;
    }
    for (int q : g.qubits)
      if (q < 0 || q >= c.n_qubits) throw std::logic_error("circuit: qubit out of range");
    switch (g.kind) {
      case GateKind::ROT_X:
      case GateKind::ROT_Y:
      case GateKind::ROT_Z:
        if (g.qubits.size() != 1 || g.slots.size() != 1)
          throw std::logic_error("circuit: malformed rotation gate");
        break;
      case GateKind::GLOBAL_ROT_Z:
        if (g.slots.size() != 1) throw std::logic_error("circuit: malformed global rotation");
        break;
      case GateKind::CZ:
        if (g.qubits.size() != 2 || !g.slots.empty())
          throw std::logic_error("circuit: malformed CZ");
        break;
      case GateKind::PAIR_XX:
        if (g.qubits.size() != 2 || g.slots.size() != 1)
          throw std::logic_error("circuit: malformed PAIR_XX");
        break;
      case GateKind::WQED_XX:
      case GateKind::WQED_I:
        if (g.slots.size() != 2)
          throw std::logic_error("circuit: entangler gates carry exactly (T, L)");
        break;
      case GateKind::HVA_TERM:
        if (g.slots.size() != 1 || !g.generator)
          throw std::logic_error("circuit: malformed HVA term");
        break;
    }
  }
  for (size_t s = 0; s < used.size(); ++s)
    if (!used[s])
      throw std::logic_error("circuit: slot " + std::to_string(s) + " never referenced");
}

}  // namespace wqed
