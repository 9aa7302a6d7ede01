#include "wqed/ansatz.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "wqed/hamiltonians.hpp"

namespace wqed {

namespace {

void check_dims(int n, int depth) {
  if (n < 2) throw std::invalid_argument("ansatz: need at least 2 qubits");
  if (depth < 1) throw std::invalid_argument("ansatz: depth must be >= 1");
}

std::vector<int> all_qubits(int n) {
  std::vector<int> q(n);
  for (int i = 0; i < n; ++i) q[i] = i;
  return q;
}

int add_slot(Circuit& c, SlotInfo info) {
  c.slots.push_back(info);
  return c.n_params() - 1;
}

int add_random_slot(Circuit& c) { return add_slot(c, SlotInfo{}); }

// Rotation block shared by the waveguide-style builders: one global Rz slot
// or one Rz slot per qubit. Returns the first slot index.
int add_rotation_layer(Circuit& c, int layer, bool global) {
  const int first = c.n_params();
  if (global) {
    Gate g;
    g.kind = GateKind::GLOBAL_ROT_Z;
    g.qubits = all_qubits(c.n_qubits);
    g.slots = {add_random_slot(c)};
    c.gates.push_back(std::move(g));
  } else {
    for (int q = 0; q < c.n_qubits; ++q) {
      Gate g;
      g.kind = GateKind::ROT_Z;
      g.qubits = {q};
      g.slots = {add_random_slot(c)};
      c.gates.push_back(std::move(g));
    }
  }
  c.layout.push_back({layer, "rotation", first, c.n_params() - first});
  return first;
}

void add_ry_row(Circuit& c, int layer, const char* role) {
  const int first = c.n_params();
  for (int q = 0; q < c.n_qubits; ++q) {
    Gate g;
    g.kind = GateKind::ROT_Y;
    g.qubits = {q};
    g.slots = {add_random_slot(c)};
    c.gates.push_back(std::move(g));
  }
  c.layout.push_back({layer, role, first, c.n_params() - first});
}

void add_cz(Circuit& c, int a, int b) {
  Gate g;
  g.kind = GateKind::CZ;
  g.qubits = {a, b};
  c.gates.push_back(std::move(g));
}

void add_hva_gate(Circuit& c, std::shared_ptr<const PauliOperator> gen,
                  const char* role, int layer) {
  Gate g;
  g.kind = GateKind::HVA_TERM;
  g.qubits = all_qubits(c.n_qubits);
  const int slot = add_random_slot(c);
  g.slots = {slot};
  g.factorizable = gen->terms_mutually_commute();
  g.generator = std::move(gen);
  c.gates.push_back(std::move(g));
  c.layout.push_back({layer, role, slot, 1});
}

}  // namespace

Circuit build_wqed_ansatz(WqedVariant variant, int n, int depth, bool global_rotation,
                          InitialState init) {
  check_dims(n, depth);
  Circuit c;
  c.ansatz_id = variant == WqedVariant::XX ? "wqed-xx" : "wqed-i";
  c.n_qubits = n;
  c.depth = depth;
  c.initial_state = init;
  for (int d = 0; d < depth; ++d) {
    Gate g;
    g.kind = variant == WqedVariant::XX ? GateKind::WQED_XX : GateKind::WQED_I;
    g.qubits = all_qubits(n);
    const int t_slot = add_random_slot(c);
    const int l_slot = add_slot(c, {.is_range = true, .frozen = false,
                                    .init = SlotInit::CONSTANT, .value = 1.0});
    g.slots = {t_slot, l_slot};
    c.gates.push_back(std::move(g));
    c.layout.push_back({d, "entangler", t_slot, 2});
    add_rotation_layer(c, d, global_rotation);
  }
  validate_circuit(c);
  return c;
}

Circuit build_ata_ansatz(WqedVariant variant, int n, int depth, bool global_rotation,
                         InitialState init) {
  check_dims(n, depth);
  Circuit c;
  c.ansatz_id = variant == WqedVariant::XX ? "ata-xx" : "ata-i";
  c.n_qubits = n;
  c.depth = depth;
  c.initial_state = init;
  const auto gen = std::make_shared<const PauliOperator>(
      variant == WqedVariant::XX ? build_ata_xx(n, 1.0) : build_ata_ising(n, 1.0));
  for (int d = 0; d < depth; ++d) {
    add_hva_gate(c, gen, "entangler", d);
    add_rotation_layer(c, d, global_rotation);
  }
  validate_circuit(c);
  return c;
}

Circuit build_powerlaw_wqed_ansatz(int n, int depth, int n_exp, double alpha,
                                   bool freeze_fit, InitialState init) {
  check_dims(n, depth);
  if (n_exp < 1) throw std::invalid_argument("ansatz: n_exp must be >= 1");
  if (n - 1 < 2 * n_exp)
    throw std::invalid_argument("ansatz: chain too short to fit n_exp exponentials");
  const ExpFitResult fit = fit_powerlaw(alpha, n - 1, n_exp);

  Circuit c;
  c.ansatz_id = "wqed-powerlaw";
  c.n_qubits = n;
  c.depth = depth;
  c.initial_state = init;
  for (int d = 0; d < depth; ++d) {
    const int layer_first = c.n_params();
    if (freeze_fit) {
      // One evolution scale per layer; the fitted amplitudes enter as fixed
      // per-gate multipliers and the fitted ranges as frozen slots.
      const int t_slot = add_random_slot(c);
      for (int e = 0; e < n_exp; ++e) {
        Gate g;
        g.kind = GateKind::WQED_I;
        g.qubits = all_qubits(n);
        const int l_slot =
            add_slot(c, {.is_range = true, .frozen = true,
                         .init = SlotInit::CONSTANT, .value = fit.terms[e].l});
        g.slots = {t_slot, l_slot};
        g.slot_scales = {fit.terms[e].j, 1.0};
        c.gates.push_back(std::move(g));
      }
    } else {
      for (int e = 0; e < n_exp; ++e) {
        Gate g;
        g.kind = GateKind::WQED_I;
        g.qubits = all_qubits(n);
        // The amplitudes of one layer share a single random draw so the
        // initial pair weights keep the fitted power-law shape.
        const int t_slot =
            add_slot(c, {.is_range = false, .frozen = false,
                         .init = SlotInit::SCALED_GROUP, .value = fit.terms[e].j,
                         .group = d});
        const int l_slot =
            add_slot(c, {.is_range = true, .frozen = false,
                         .init = SlotInit::CONSTANT, .value = fit.terms[e].l});
        g.slots = {t_slot, l_slot};
        c.gates.push_back(std::move(g));
      }
    }
    c.layout.push_back({d, "entangler", layer_first, c.n_params() - layer_first});
    add_rotation_layer(c, d, /*global=*/true);
  }
  validate_circuit(c);
  return c;
}

Circuit build_hea(int n, int depth, InitialState init) {
  check_dims(n, depth);
  Circuit c;
  c.ansatz_id = "hea";
  c.n_qubits = n;
  c.depth = depth;
  c.initial_state = init;
  for (int d = 0; d < depth; ++d) {
    const int first = c.n_params();
    for (int q = 0; q < n; ++q) {
      for (GateKind kind : {GateKind::ROT_Z, GateKind::ROT_X, GateKind::ROT_Z}) {
        Gate g;
        g.kind = kind;
        g.qubits = {q};
        g.slots = {add_random_slot(c)};
        c.gates.push_back(std::move(g));
      }
    }
    c.layout.push_back({d, "rotation", first, c.n_params() - first});
    for (int q = 0; q < n; ++q) add_cz(c, q, (q + 1) % n);
  }
  validate_circuit(c);
  return c;
}

Circuit build_brick_layer(int n, int depth, InitialState init) {
  check_dims(n, depth);
  if (n % 2 != 0) throw std::invalid_argument("brick-layer ansatz needs even n");
  Circuit c;
  c.ansatz_id = "brick";
  c.n_qubits = n;
  c.depth = depth;
  c.initial_state = init;
  for (int d = 0; d < depth; ++d) {
    add_ry_row(c, d, "rotation-a");
    for (int q = 0; q + 1 < n; q += 2) add_cz(c, q, q + 1);
    add_ry_row(c, d, "rotation-b");
    for (int q = 1; q < n; q += 2) add_cz(c, q, (q + 1) % n);
  }
  add_ry_row(c, -1, "rotation-final");
  validate_circuit(c);
  return c;
}

Circuit build_hva_tfim(int n, int depth) {
  check_dims(n, depth);
  Circuit c;
  c.ansatz_id = "hva-tfim";
  c.n_qubits = n;
  c.depth = depth;
  c.initial_state = InitialState::ALL_DOWN;
  const auto hxx = std::make_shared<const PauliOperator>(-1.0 * sum_xx_nn(n, Boundary::OPEN));
  const auto hz = std::make_shared<const PauliOperator>(sum_z(n));
  for (int d = 0; d < depth; ++d) {
    add_hva_gate(c, hxx, "bond", d);
    add_hva_gate(c, hz, "field", d);
  }
  validate_circuit(c);
  return c;
}

Circuit build_hva_xxz(int n, int depth) {
  check_dims(n, depth);
  if (n % 2 != 0 || n < 4)
    throw std::invalid_argument("hva-xxz needs an even chain of at least 4 qubits");
  Circuit c;
  c.ansatz_id = "hva-xxz";
  c.n_qubits = n;
  c.depth = depth;
  c.initial_state = InitialState::BELL_PAIRS;

  auto links_op = [&](int start, Pauli p) {
    PauliOperator op(n);
    for (int q = start; q < n; q += 2) op.add_term(1.0, {{q, p}, {(q + 1) % n, p}});
    return std::make_shared<const PauliOperator>(std::move(op));
  };
  // Odd links wrap around the ring; even links host the initial Bell pairs.
  const auto odd_x = links_op(1, Pauli::X), odd_y = links_op(1, Pauli::Y),
             odd_z = links_op(1, Pauli::Z);
  const auto even_x = links_op(0, Pauli::X), even_y = links_op(0, Pauli::Y),
             even_z = links_op(0, Pauli::Z);
  for (int d = 0; d < depth; ++d) {
    add_hva_gate(c, odd_x, "odd-x", d);
    add_hva_gate(c, odd_y, "odd-y", d);
    add_hva_gate(c, odd_z, "odd-z", d);
    add_hva_gate(c, even_x, "even-x", d);
    add_hva_gate(c, even_y, "even-y", d);
    add_hva_gate(c, even_z, "even-z", d);
  }
  validate_circuit(c);
  return c;
}

Circuit build_ansatz(const std::string& id, int n, int depth,
                     const AnsatzOptions& options) {
  const InitialState init = options.initial_state.value_or(InitialState::ALL_DOWN);
  if (id == "wqed-xx")
    return build_wqed_ansatz(WqedVariant::XX, n, depth, /*global_rotation=*/false, init);
  if (id == "wqed-i")
    return build_wqed_ansatz(WqedVariant::ISING, n, depth, /*global_rotation=*/true, init);
  if (id == "wqed-powerlaw")
    return build_powerlaw_wqed_ansatz(n, depth, options.n_exp, options.alpha,
                                      options.freeze_fit, init);
  if (id == "ata-xx")
    return build_ata_ansatz(WqedVariant::XX, n, depth, /*global_rotation=*/false, init);
  if (id == "ata-i")
    return build_ata_ansatz(WqedVariant::ISING, n, depth, /*global_rotation=*/true, init);
  if (id == "hea") return build_hea(n, depth, init);
  if (id == "brick") return build_brick_layer(n, depth, init);
  if (id == "hva-tfim") return build_hva_tfim(n, depth);
  if (id == "hva-xxz") return build_hva_xxz(n, depth);
  throw std::invalid_argument("unknown ansatz id: " + id);
}

}  // namespace wqed
