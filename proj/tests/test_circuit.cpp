#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "test_util.hpp"
#include "wqed/circuit.hpp"
#include "wqed/gates.hpp"
#include "wqed/hamiltonians.hpp"

using wqed::Circuit;
using wqed::Gate;
using wqed::GateKind;
using wqed::InitialState;
using wqed::SlotInfo;
using wqed::StateVector;

namespace {

// Rotations on each qubit, one CZ, one pair-XX: small enough to multiply out
// by hand with the embedding oracle.
Circuit small_circuit() {
  Circuit c;
  c.ansatz_id = "handmade";
  c.n_qubits = 3;
  c.depth = 1;
  c.initial_state = InitialState::ALL_ZERO;
  c.slots = {SlotInfo{}, SlotInfo{}, SlotInfo{}};
  c.gates.push_back(Gate{GateKind::ROT_X, {0}, {0}, {}, nullptr, false});
  c.gates.push_back(Gate{GateKind::ROT_Y, {1}, {1}, {}, nullptr, false});
  c.gates.push_back(Gate{GateKind::CZ, {0, 1}, {}, {}, nullptr, false});
  c.gates.push_back(Gate{GateKind::PAIR_XX, {1, 2}, {2}, {}, nullptr, false});
  return c;
}

Eigen::MatrixXcd small_circuit_matrix(const Eigen::VectorXd& p) {
  const Eigen::MatrixXcd u1 = oracle::embed_single(3, 0, wqed::rot_x(p[0]));
  const Eigen::MatrixXcd u2 = oracle::embed_single(3, 1, wqed::rot_y(p[1]));
  const Eigen::MatrixXcd u3 = oracle::embed_two(3, 0, 1, wqed::cz_matrix());
  const Eigen::MatrixXcd u4 = oracle::embed_two(3, 1, 2, wqed::pair_xx(p[2]));
  return u4 * u3 * u2 * u1;
}

}  // namespace

TEST_CASE("hand-built circuit matches the embedded matrix product") {
  const Circuit c = small_circuit();
  wqed::validate_circuit(c);
  Eigen::VectorXd p(3);
  p << 0.31, -0.73, 1.21;
  const StateVector got = wqed::apply_circuit(c, p);
  Eigen::VectorXcd start = Eigen::VectorXcd::Zero(8);
  start(0) = 1.0;
  CHECK((got.amps - small_circuit_matrix(p) * start).norm() < 1e-13);
}

TEST_CASE("inplace application continues from the given state") {
  const Circuit c = small_circuit();
  Eigen::VectorXd p(3);
  p << 0.1, 0.2, 0.3;
  StateVector psi(3);
  psi.amps = oracle::random_state(3, 33);
  const Eigen::VectorXcd want = small_circuit_matrix(p) * psi.amps;
  wqed::apply_circuit_inplace(c, p, psi);
  CHECK((psi.amps - want).norm() < 1e-13);
}

TEST_CASE("global z-rotation shares one angle across all qubits") {
  Circuit c;
  c.n_qubits = 3;
  c.initial_state = InitialState::ALL_ZERO;
  c.slots = {SlotInfo{}};
  c.gates.push_back(Gate{GateKind::GLOBAL_ROT_Z, {0, 1, 2}, {0}, {}, nullptr, false});
  wqed::validate_circuit(c);

  Eigen::VectorXd p(1);
  p << 0.47;
  StateVector psi(3);
  psi.amps = oracle::random_state(3, 5);
  Eigen::VectorXcd want = psi.amps;
  for (int q = 0; q < 3; ++q) want = oracle::embed_single(3, q, wqed::rot_z(0.47)) * want;
  wqed::apply_circuit_inplace(c, p, psi);
  CHECK((psi.amps - want).norm() < 1e-13);
}

TEST_CASE("waveguide Ising gate factorizes into pair rotations") {
  const int n = 4;
  Circuit c;
  c.n_qubits = n;
  c.initial_state = InitialState::ALL_DOWN;
  c.slots = {SlotInfo{}, SlotInfo{.is_range = true}};
  Gate g;
  g.kind = GateKind::WQED_I;
  for (int q = 0; q < n; ++q) g.qubits.push_back(q);
  g.slots = {0, 1};
  c.gates.push_back(g);
  wqed::validate_circuit(c);

  Eigen::VectorXd p(2);
  p << 0.6, 1.7;  // T, L
  const StateVector got = wqed::apply_circuit(c, p);

  // Against exp(-i T H_I) computed densely from the Hamiltonian builder.
  const Eigen::MatrixXcd h = oracle::to_dense(wqed::build_wqed_ising(n, 1.0, 1.7));
  Eigen::VectorXcd want = Eigen::VectorXcd::Zero(1 << n);
  want((1 << n) - 1) = 1.0;
  want = oracle::expm_dense(h, 0.6) * want;
  CHECK((got.amps - want).norm() < 1e-11);
}

TEST_CASE("waveguide exchange gate goes through the propagator") {
  const int n = 3;
  Circuit c;
  c.n_qubits = n;
  c.initial_state = InitialState::NEEL;
  c.slots = {SlotInfo{}, SlotInfo{.is_range = true}};
  Gate g;
  g.kind = GateKind::WQED_XX;
  for (int q = 0; q < n; ++q) g.qubits.push_back(q);
  g.slots = {0, 1};
  c.gates.push_back(g);

  const wqed::GateAction action = wqed::gate_action(c, 0, Eigen::Vector2d(0.8, 2.0));
  CHECK(action.factors.empty());
  REQUIRE(action.generator != nullptr);
  CHECK(action.time == doctest::Approx(0.8));

  Eigen::VectorXd p(2);
  p << 0.8, 2.0;
  const StateVector got = wqed::apply_circuit(c, p);
  const Eigen::MatrixXcd h = oracle::to_dense(wqed::build_wqed_xx(n, 1.0, 2.0));
  StateVector start = wqed::prepare_initial_state(n, InitialState::NEEL);
  const Eigen::VectorXcd want = oracle::expm_dense(h, 0.8) * start.amps;
  CHECK((got.amps - want).norm() < 1e-10);
}

TEST_CASE("range slots are clamped at the floor") {
  Circuit c;
  c.n_qubits = 2;
  c.initial_state = InitialState::ALL_DOWN;
  c.slots = {SlotInfo{}, SlotInfo{.is_range = true}};
  Gate g;
  g.kind = GateKind::WQED_I;
  g.qubits = {0, 1};
  g.slots = {0, 1};
  c.gates.push_back(g);

  Eigen::VectorXd below(2), at(2);
  below << 0.5, -3.0;
  at << 0.5, wqed::kRangeFloor;
  const StateVector a = wqed::apply_circuit(c, below);
  const StateVector b = wqed::apply_circuit(c, at);
  CHECK((a.amps - b.amps).norm() < 1e-14);
}

TEST_CASE("slot scales multiply the raw parameter") {
  Circuit c;
  c.n_qubits = 2;
  c.initial_state = InitialState::ALL_ZERO;
  c.slots = {SlotInfo{}};
  Gate g;
  g.kind = GateKind::ROT_X;
  g.qubits = {0};
  g.slots = {0};
  g.slot_scales = {2.5};
  c.gates.push_back(g);

  Eigen::VectorXd p(1);
  p << 0.2;
  const wqed::GateAction action = wqed::gate_action(c, 0, p);
  REQUIRE(action.factors.size() == 1);
  CHECK((action.factors[0].u2 - wqed::rot_x(0.5)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("commuting HVA terms factorize exactly") {
  auto gen = std::make_shared<wqed::PauliOperator>(wqed::sum_zz(3, wqed::Boundary::OPEN));
  Circuit c;
  c.n_qubits = 3;
  c.initial_state = InitialState::ALL_ZERO;
  c.slots = {SlotInfo{}};
  Gate g;
  g.kind = GateKind::HVA_TERM;
  g.qubits = {0, 1, 2};
  g.slots = {0};
  g.generator = gen;
  g.factorizable = gen->terms_mutually_commute();
  c.gates.push_back(g);
  REQUIRE(g.factorizable);

  Eigen::VectorXd p(1);
  p << 0.9;
  StateVector psi(3);
  psi.amps = oracle::random_state(3, 21);
  const Eigen::VectorXcd want = oracle::expm_dense(oracle::to_dense(*gen), 0.9) * psi.amps;
  wqed::apply_circuit_inplace(c, p, psi);
  CHECK((psi.amps - want).norm() < 1e-12);
}

TEST_CASE("validate_circuit rejects malformed structures") {
  Circuit c = small_circuit();
  c.gates[0].slots = {5};
  CHECK_THROWS_AS(wqed::validate_circuit(c), std::logic_error);

  c = small_circuit();
  c.slots.push_back(SlotInfo{});  // a slot no gate references
  CHECK_THROWS_AS(wqed::validate_circuit(c), std::logic_error);

  c = small_circuit();
  c.gates[1].qubits = {7};
  CHECK_THROWS_AS(wqed::validate_circuit(c), std::logic_error);

  c = small_circuit();
  c.gates[2].slots = {0};  // CZ with a slot
  CHECK_THROWS_AS(wqed::validate_circuit(c), std::logic_error);
}

TEST_CASE("parameter count mismatches throw") {
  const Circuit c = small_circuit();
  CHECK_THROWS_AS(wqed::apply_circuit(c, Eigen::VectorXd::Zero(2)), std::invalid_argument);
}
