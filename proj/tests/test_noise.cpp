#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "test_util.hpp"
#include "wqed/ansatz.hpp"
#include "wqed/gates.hpp"
#include "wqed/hamiltonians.hpp"
#include "wqed/noise.hpp"
#include "wqed/vqe.hpp"

using wqed::Circuit;
using wqed::DensityMatrix;
using wqed::Gate;
using wqed::GateKind;
using wqed::InitialState;
using wqed::NoiseModel;
using wqed::SlotInfo;

TEST_CASE("named presets") {
  const NoiseModel low = wqed::noise_preset("low");
  CHECK(low.p1 == doctest::Approx(1e-5));
  CHECK(low.p2 == doctest::Approx(5e-4));
  const NoiseModel high = wqed::noise_preset("high");
  CHECK(high.p1 == doctest::Approx(1e-4));
  CHECK(high.p2 == doctest::Approx(5e-3));
  CHECK_THROWS_AS(wqed::noise_preset("medium"), std::invalid_argument);
}

TEST_CASE("Kraus sets are complete and act as expected") {
  for (double p : {0.0, 0.1, 0.9, 1.0}) {
    for (const auto& set : {wqed::damping_kraus(p), wqed::dephasing_kraus(p)}) {
      Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
      for (const auto& k : set) sum += k.adjoint() * k;
      CHECK((sum - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    }
  }

  // Damping decays |1><1| towards |0><0|.
  const double p = 0.3;
  DensityMatrix rho(1);
  rho.rho << 0, 0, 0, 1;
  wqed::apply_kraus(rho, 0, wqed::damping_kraus(p));
  CHECK(rho.rho(0, 0).real() == doctest::Approx(p));
  CHECK(rho.rho(1, 1).real() == doctest::Approx(1 - p));

  // Dephasing kills coherences and keeps populations.
  DensityMatrix plus(1);
  plus.rho << 0.5, 0.5, 0.5, 0.5;
  wqed::apply_kraus(plus, 0, wqed::dephasing_kraus(p));
  CHECK(plus.rho(0, 0).real() == doctest::Approx(0.5));
  CHECK(plus.rho(0, 1).real() == doctest::Approx(0.5 * std::sqrt(1 - p)));
  CHECK_THROWS_AS(wqed::damping_kraus(1.5), std::invalid_argument);
}

TEST_CASE("zero-probability noise reproduces the pure circuit") {
  const Circuit c = wqed::build_ansatz("hea", 3, 2);
  const Eigen::VectorXd p = wqed::draw_initial_params(c, 11);
  wqed::NoisyApplyStats stats;
  const DensityMatrix rho = wqed::noisy_apply_circuit(c, p, NoiseModel{0.0, 0.0}, &stats);
  const wqed::StateVector psi = wqed::apply_circuit(c, p);
  CHECK((rho.rho - psi.amps * psi.amps.adjoint()).cwiseAbs().maxCoeff() < 1e-12);

  // Channels are applied even at p = 0 so the channel count is an invariant:
  // 2 per acted qubit per gate (CZ acts on 2, rotations on 1).
  const long rotations = 3LL * 3 * 2;  // Rz Rx Rz per qubit per layer
  const long cz_qubits = 2LL * 3 * 2;  // ring of 3 CZs, 2 qubits each
  CHECK(stats.gates == static_cast<long>(c.gates.size()));
  CHECK(stats.channel_applications == 2 * (rotations + cz_qubits));
}

TEST_CASE("global rotation counts as n single-qubit gates") {
  const Circuit c = wqed::build_ansatz("wqed-i", 4, 1);
  const Eigen::VectorXd p = wqed::draw_initial_params(c, 1);
  wqed::NoisyApplyStats stats;
  wqed::noisy_apply_circuit(c, p, NoiseModel{0.0, 0.0}, &stats);
  // Entangler touches all 4 qubits, the global rotation all 4 individually.
  CHECK(stats.channel_applications == 2 * (4 + 4));
}

TEST_CASE("noisy evolution matches a hand-built channel oracle") {
  // One Rx on qubit 0 of two, with p1 noise: conjugation, then damping and
  // dephasing on that qubit only.
  Circuit c;
  c.n_qubits = 2;
  c.initial_state = InitialState::ALL_DOWN;
  c.slots = {SlotInfo{}};
  c.gates.push_back(Gate{GateKind::ROT_X, {0}, {0}, {}, nullptr, false});

  const double p1 = 0.2;
  Eigen::VectorXd p(1);
  p << 0.6;
  const DensityMatrix got = wqed::noisy_apply_circuit(c, p, NoiseModel{p1, 0.9});

  const Eigen::MatrixXcd u = oracle::embed_single(2, 0, wqed::rot_x(0.6));
  Eigen::VectorXcd start = Eigen::VectorXcd::Zero(4);
  start(3) = 1.0;
  Eigen::MatrixXcd want = u * (start * start.adjoint()) * u.adjoint();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(4, 4);
  for (const auto& k : wqed::damping_kraus(p1)) {
    const Eigen::MatrixXcd kk = oracle::embed_single(2, 0, k);
    acc += kk * want * kk.adjoint();
  }
  want = acc;
  acc.setZero();
  for (const auto& k : wqed::dephasing_kraus(p1)) {
    const Eigen::MatrixXcd kk = oracle::embed_single(2, 0, k);
    acc += kk * want * kk.adjoint();
  }
  want = acc;
  CHECK((got.rho - want).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("noisy states stay physical") {
  const Circuit c = wqed::build_ansatz("wqed-i", 3, 2);
  const Eigen::VectorXd p = wqed::draw_initial_params(c, 3);
  const DensityMatrix rho = wqed::noisy_apply_circuit(c, p, wqed::noise_preset("high"));
  CHECK(rho.trace_real() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK((rho.rho - rho.rho.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.rho);
  CHECK(es.eigenvalues().minCoeff() > -1e-12);
  // Noise strictly mixes the state.
  CHECK(rho.purity() < 1.0);
}

TEST_CASE("noisy cost equals the trace against the noisy state") {
  const Circuit c = wqed::build_ansatz("wqed-i", 3, 1);
  const Eigen::VectorXd p = wqed::draw_initial_params(c, 9);
  const wqed::PauliOperator h = wqed::build_tfim(3, 1.0, wqed::Boundary::OPEN);
  const NoiseModel nm = wqed::noise_preset("low");
  const DensityMatrix rho = wqed::noisy_apply_circuit(c, p, nm);
  CHECK(wqed::noisy_cost(c, p, h, nm) == doctest::Approx(h.expectation(rho.rho)).epsilon(1e-12));
}

TEST_CASE("noisy refinement warm-starts from the noiseless optimum") {
  wqed::ModelSpec spec;
  spec.kind = wqed::ModelKind::TFIM;
  spec.n_qubits = 2;
  const wqed::PauliOperator ht = wqed::build_model(spec);
  const Circuit c = wqed::build_wqed_ansatz(wqed::WqedVariant::ISING, 2, 1, true);
  wqed::OptimizerConfig cfg;
  cfg.max_iters = 150;
  const wqed::RunRecord clean =
      wqed::aavqe(spec, wqed::build_h0(spec), ht, c, wqed::Schedule{}, cfg, 2);
  REQUIRE_FALSE(clean.failed);

  const wqed::RunRecord noisy = wqed::noisy_vqe(ht, c, clean, wqed::noise_preset("high"), cfg);
  CHECK_FALSE(noisy.failed);
  REQUIRE(noisy.steps.size() == 1);
  CHECK((noisy.steps[0].init_params - clean.steps.back().best_params).norm() == 0.0);
  CHECK(noisy.noise_preset == "custom");
  CHECK(noisy.noise_p1.has_value());
  CHECK(noisy.ansatz_id == clean.ansatz_id);
  CHECK(noisy.seed == clean.seed);

  wqed::RunRecord broken = clean;
  broken.failed = true;
  CHECK_THROWS_AS(wqed::noisy_vqe(ht, c, broken, wqed::noise_preset("low"), cfg),
                  std::invalid_argument);
}

TEST_CASE("invalid probabilities are rejected") {
  const Circuit c = wqed::build_ansatz("wqed-i", 2, 1);
  const Eigen::VectorXd p = wqed::draw_initial_params(c, 0);
  CHECK_THROWS_AS(wqed::noisy_apply_circuit(c, p, NoiseModel{-0.1, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(wqed::noisy_apply_circuit(c, p, NoiseModel{0.0, 1.1}), std::invalid_argument);
}
