#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "test_util.hpp"
#include "wqed/hamiltonians.hpp"

using wqed::Boundary;
using wqed::Pauli;
using wqed::PauliOperator;

namespace {

// Coefficient of the string with the given per-qubit labels, 0 if absent.
double coeff_of(const PauliOperator& op, const std::vector<Pauli>& labels) {
  for (const wqed::PauliTerm& t : op.terms())
    if (op.term_labels(t) == labels) return t.coeff;
  return 0.0;
}

}  // namespace

TEST_CASE("XXZ chain structure") {
  const PauliOperator open = wqed::build_xxz(3, 0.4, Boundary::OPEN);
  CHECK(coeff_of(open, {Pauli::X, Pauli::X, Pauli::I}) == doctest::Approx(1.0));
  CHECK(coeff_of(open, {Pauli::I, Pauli::Y, Pauli::Y}) == doctest::Approx(1.0));
  CHECK(coeff_of(open, {Pauli::Z, Pauli::Z, Pauli::I}) == doctest::Approx(-0.4));
  CHECK(coeff_of(open, {Pauli::X, Pauli::I, Pauli::X}) == doctest::Approx(0.0));
  CHECK(open.n_terms() == 6);

  const PauliOperator per = wqed::build_xxz(3, 0.4, Boundary::PERIODIC);
  CHECK(coeff_of(per, {Pauli::X, Pauli::I, Pauli::X}) == doctest::Approx(1.0));
  CHECK(per.n_terms() == 9);

  // Dense cross-check against an explicitly assembled matrix.
  const Eigen::MatrixXcd want =
      oracle::kron_string({Pauli::X, Pauli::X, Pauli::I}) +
      oracle::kron_string({Pauli::I, Pauli::X, Pauli::X}) +
      oracle::kron_string({Pauli::Y, Pauli::Y, Pauli::I}) +
      oracle::kron_string({Pauli::I, Pauli::Y, Pauli::Y}) -
      0.4 * (oracle::kron_string({Pauli::Z, Pauli::Z, Pauli::I}) +
             oracle::kron_string({Pauli::I, Pauli::Z, Pauli::Z}));
  CHECK((oracle::to_dense(open) - want).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("transverse-field Ising chain structure") {
  const PauliOperator h = wqed::build_tfim(3, 0.7, Boundary::OPEN);
  CHECK(coeff_of(h, {Pauli::X, Pauli::X, Pauli::I}) == doctest::Approx(-1.0));
  CHECK(coeff_of(h, {Pauli::I, Pauli::Z, Pauli::I}) == doctest::Approx(0.7));
  CHECK(h.n_terms() == 5);
}

TEST_CASE("long-range Ising carries the double-counted pair weight") {
  const double alpha = 1.3, theta = 0.5;
  const PauliOperator h = wqed::build_lrtfim(4, alpha, theta);
  // Each unordered pair at distance r contributes -2 sin(theta) / r^alpha.
  CHECK(coeff_of(h, {Pauli::X, Pauli::X, Pauli::I, Pauli::I}) ==
        doctest::Approx(-2.0 * std::sin(theta)));
  CHECK(coeff_of(h, {Pauli::X, Pauli::I, Pauli::X, Pauli::I}) ==
        doctest::Approx(-2.0 * std::sin(theta) / std::pow(2.0, alpha)));
  CHECK(coeff_of(h, {Pauli::X, Pauli::I, Pauli::I, Pauli::X}) ==
        doctest::Approx(-2.0 * std::sin(theta) / std::pow(3.0, alpha)));
  CHECK(coeff_of(h, {Pauli::Z, Pauli::I, Pauli::I, Pauli::I}) == doctest::Approx(std::cos(theta)));
  // 6 pairs + 4 fields.
  CHECK(h.n_terms() == 10);
  CHECK_THROWS_AS(wqed::build_lrtfim(4, -1.0, theta), std::invalid_argument);
}

TEST_CASE("waveguide couplings decay exponentially") {
  const double j = 1.7, l = 2.3;
  const PauliOperator xx = wqed::build_wqed_xx(4, j, l);
  for (int r = 1; r <= 3; ++r) {
    std::vector<Pauli> lx(4, Pauli::I), ly(4, Pauli::I);
    lx[0] = lx[r] = Pauli::X;
    ly[0] = ly[r] = Pauli::Y;
    CHECK(coeff_of(xx, lx) == doctest::Approx(0.5 * j * std::exp(-r / l)));
    CHECK(coeff_of(xx, ly) == doctest::Approx(0.5 * j * std::exp(-r / l)));
  }

  const PauliOperator ising = wqed::build_wqed_ising(4, j, l);
  for (int r = 1; r <= 3; ++r) {
    std::vector<Pauli> lx(4, Pauli::I);
    lx[1] = Pauli::X;
    if (1 + r < 4) {
      lx[1 + r] = Pauli::X;
      CHECK(coeff_of(ising, lx) == doctest::Approx(2.0 * j * std::exp(-r / l)));
    }
  }
  CHECK(ising.n_terms() == 6);
}

TEST_CASE("all-to-all limits are the uniform-coupling operators") {
  const PauliOperator ata = wqed::build_ata_xx(4, 0.9);
  CHECK(coeff_of(ata, {Pauli::X, Pauli::I, Pauli::I, Pauli::X}) == doctest::Approx(0.45));
  CHECK(coeff_of(ata, {Pauli::Y, Pauli::Y, Pauli::I, Pauli::I}) == doctest::Approx(0.45));
  CHECK(ata.n_terms() == 12);

  const PauliOperator atai = wqed::build_ata_ising(3, 0.9);
  CHECK(coeff_of(atai, {Pauli::X, Pauli::I, Pauli::X}) == doctest::Approx(1.8));
  CHECK(atai.n_terms() == 3);

  // Large L converges to the all-to-all operator up to the overall e^{-r/L}
  // factor at r=1; rescale and compare.
  const double big_l = 1e6;
  PauliOperator wq = wqed::build_wqed_xx(4, 0.9 * std::exp(1.0 / big_l), big_l);
  const Eigen::MatrixXcd a = oracle::to_dense(wq);
  const Eigen::MatrixXcd b = oracle::to_dense(ata);
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-5);
}

TEST_CASE("field and bond sums") {
  CHECK(wqed::sum_z(3).n_terms() == 3);
  CHECK(wqed::sum_zz(3, Boundary::OPEN).n_terms() == 2);
  CHECK(wqed::sum_zz(3, Boundary::PERIODIC).n_terms() == 3);
  CHECK(wqed::sum_xx_nn(4, Boundary::OPEN).n_terms() == 3);
  CHECK(coeff_of(wqed::sum_z(3), {Pauli::Z, Pauli::I, Pauli::I}) == doctest::Approx(1.0));
}

TEST_CASE("interpolated cost is the affine combination") {
  const PauliOperator h0 = wqed::sum_z(3);
  const PauliOperator ht = wqed::build_tfim(3, 1.0, Boundary::OPEN);
  for (double s : {0.0, 0.3, 1.0}) {
    const PauliOperator c = wqed::build_cost(s, h0, ht);
    const Eigen::MatrixXcd want = (1 - s) * oracle::to_dense(h0) + s * oracle::to_dense(ht);
    CHECK((oracle::to_dense(c) - want).cwiseAbs().maxCoeff() < 1e-13);
  }
  CHECK_THROWS_AS(wqed::build_cost(1.5, h0, ht), std::invalid_argument);
}

TEST_CASE("critical angle locates a closing gap") {
  const int n = 6;
  const double alpha = 3.0;
  const double theta_c = wqed::critical_theta(n, alpha);
  CHECK(theta_c > 0.0);
  CHECK(theta_c < std::numbers::pi / 2);
  CHECK(wqed::gap_above_ground(wqed::build_lrtfim(n, alpha, theta_c)) < 1.0 / (n * n));
  // One grid step earlier the gap is still open.
  CHECK(wqed::gap_above_ground(wqed::build_lrtfim(n, alpha, theta_c - 0.01)) >= 1.0 / (n * n));
}

TEST_CASE("model plumbing") {
  wqed::ModelSpec spec;
  spec.kind = wqed::ModelKind::XXZ;
  spec.n_qubits = 4;
  spec.delta = 0.5;
  spec.boundary = Boundary::PERIODIC;
  CHECK(wqed::build_model(spec) == wqed::build_xxz(4, 0.5, Boundary::PERIODIC));
  CHECK(wqed::build_h0(spec) == wqed::sum_zz(4, Boundary::PERIODIC));
  CHECK(wqed::model_initial_state(spec.kind) == wqed::InitialState::NEEL);

  spec.kind = wqed::ModelKind::TFIM;
  spec.g = 1.1;
  spec.boundary = Boundary::OPEN;
  CHECK(wqed::build_model(spec) == wqed::build_tfim(4, 1.1, Boundary::OPEN));
  CHECK(wqed::build_h0(spec) == wqed::sum_z(4));
  CHECK(wqed::model_initial_state(spec.kind) == wqed::InitialState::ALL_DOWN);

  CHECK(wqed::model_kind_name(wqed::ModelKind::LRTFIM) == "lrtfim");
  CHECK(wqed::model_kind_from_name("xxz") == wqed::ModelKind::XXZ);
  CHECK_THROWS_AS(wqed::model_kind_from_name("bogus"), std::invalid_argument);
}
