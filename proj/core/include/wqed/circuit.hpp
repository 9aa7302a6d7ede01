#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wqed/krylov.hpp"
#include "wqed/pauli.hpp"
#include "wqed/state.hpp"

namespace wqed {

// Range-type parameters (interaction ranges L) are clamped to this floor
// wherever a circuit is evaluated; the optimizer sees the clamped landscape.
inline constexpr double kRangeFloor = 1e-3;

enum class GateKind {
  ROT_X,         // one qubit, one slot
  ROT_Y,         // one qubit, one slot
  ROT_Z,         // one qubit, one slot
  GLOBAL_ROT_Z,  // all qubits, one shared slot
  CZ,            // two qubits, no slots
  PAIR_XX,       // two qubits, one slot: exp(-i phi XX)
  WQED_XX,       // all qubits, slots (T, L): exp(-i T H_xx(J=1, L))
  WQED_I,        // all qubits, slots (T, L): exp(-i T H_ising(J=1, L))
  HVA_TERM,      // fixed generator, one slot: exp(-i theta G)
};

// How a slot is filled when a fresh parameter vector is drawn (seeded).
enum class SlotInit {
  RANDOM_SMALL,  // 0.01 * uniform[0, 2 pi)
  CONSTANT,      // fixed value
  SCALED_GROUP,  // value * (one shared 0.01 * uniform[0, 2 pi) draw per group)
};

struct SlotInfo {
  bool is_range = false;  // clamped to kRangeFloor at evaluation time
  bool frozen = false;    // excluded from optimization
  SlotInit init = SlotInit::RANDOM_SMALL;
  double value = 0.0;  // CONSTANT: the value; SCALED_GROUP: the scale
  int group = -1;      // SCALED_GROUP: slots with equal group share a draw
};

struct Gate {
  GateKind kind = GateKind::ROT_Z;
  std::vector<int> qubits;  // acted qubits (all qubits for global kinds)
  std::vector<int> slots;   // parameter slots consumed, in kind-defined order
  std::vector<double> slot_scales;  // optional per-use multiplier (empty = 1)
  std::shared_ptr<const PauliOperator> generator;  // HVA_TERM only
  bool factorizable = false;  // HVA_TERM: commuting <=2-local generator
};

struct LayoutEntry {
  int layer = 0;  // 0-based; -1 marks structure outside the repeated layers
  std::string role;
  int first = 0;
  int count = 0;
};

struct Circuit {
  std::string ansatz_id;
  int n_qubits = 0;
  int depth = 0;
  InitialState initial_state = InitialState::ALL_ZERO;
  std::vector<Gate> gates;
  std::vector<SlotInfo> slots;
  std::vector<LayoutEntry> layout;

  int n_params() const { return static_cast<int>(slots.size()); }
};

// Elementary unitaries of one gate evaluation. When `factors` is empty the
// gate is exp(-i time * generator) and must go through the Krylov propagator.
struct GateFactor {
  int q1 = -1, q2 = -1;  // q2 < 0 marks a single-qubit factor
  Eigen::Matrix2cd u2;
  Eigen::Matrix4cd u4;
};

struct GateAction {
  std::vector<GateFactor> factors;
  std::shared_ptr<const PauliOperator> generator;
  double time = 0.0;
};

/// Resolves one gate against a parameter vector (slot scales applied, range
/// slots clamped).
GateAction gate_action(const Circuit& circuit, int gate_index,
                       const Eigen::VectorXd& params);

/// Runs the circuit on its declared initial state. params must have exactly
/// n_params entries.
StateVector apply_circuit(const Circuit& circuit, const Eigen::VectorXd& params,
                          const ExpmOptions& expm = {});

/// Runs the circuit on a caller-provided start state.
void apply_circuit_inplace(const Circuit& circuit, const Eigen::VectorXd& params,
                           StateVector& psi, const ExpmOptions& expm = {});

/// Structural sanity checks (slot references in range, every slot used,
/// qubit indices valid). Throws std::logic_error on violation.
void validate_circuit(const Circuit& circuit);

}  // namespace wqed
