#include <doctest.h>

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

#include "test_util.hpp"
#include "wqed/pauli.hpp"

using wqed::Pauli;
using wqed::PauliOperator;

TEST_CASE("single Pauli matrices and the bit convention") {
  // Qubit 0 is the most significant bit: Z on qubit 0 of two qubits is
  // diag(1, 1, -1, -1).
  PauliOperator z0(2);
  z0.add_term(1.0, {{0, Pauli::Z}});
  const Eigen::MatrixXcd dense = z0.to_dense();
  CHECK(dense.isApprox(Eigen::Vector4cd(1, 1, -1, -1).asDiagonal().toDenseMatrix(), 1e-14));

  PauliOperator z1(2);
  z1.add_term(1.0, {{1, Pauli::Z}});
  CHECK(z1.to_dense().isApprox(Eigen::Vector4cd(1, -1, 1, -1).asDiagonal().toDenseMatrix(), 1e-14));

  // Y carries the i^{#Y} factor.
  PauliOperator y(1);
  y.add_term(1.0, {Pauli::Y});
  Eigen::Matrix2cd ym;
  ym << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
  CHECK(y.to_dense().isApprox(ym, 1e-14));
}

TEST_CASE("to_dense matches the Kronecker oracle on random operators") {
  for (int n = 2; n <= 5; ++n) {
    const PauliOperator op = oracle::random_operator(n, 8, 100 + n);
    CHECK((op.to_dense() - oracle::to_dense(op)).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("matvec agrees with the dense matrix") {
  const PauliOperator op = oracle::random_operator(4, 10, 7);
  const Eigen::MatrixXcd h = oracle::to_dense(op);
  for (unsigned s = 0; s < 3; ++s) {
    const Eigen::VectorXcd psi = oracle::random_state(4, s);
    const Eigen::VectorXcd got = op.apply(psi);
    CHECK((got - h * psi).norm() < 1e-12);
  }
}

TEST_CASE("expectation values, vector and density-matrix forms") {
  const PauliOperator op = oracle::random_operator(3, 6, 11);
  const Eigen::MatrixXcd h = oracle::to_dense(op);
  const Eigen::VectorXcd psi = oracle::random_state(3, 5);
  const double want = std::real(psi.dot(h * psi));
  CHECK(op.expectation(psi) == doctest::Approx(want).epsilon(1e-12));

  const Eigen::MatrixXcd rho = psi * psi.adjoint();
  CHECK(op.expectation(rho) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("terms merge, cancel and compare") {
  PauliOperator a(2);
  a.add_term(0.5, {Pauli::X, Pauli::X});
  a.add_term(0.25, {Pauli::X, Pauli::X});
  CHECK(a.n_terms() == 1);
  CHECK(a.terms()[0].coeff == doctest::Approx(0.75));

  PauliOperator b(2);
  b.add_term(0.75, {{0, Pauli::X}, {1, Pauli::X}});
  CHECK(a == b);

  b.add_term(-0.75, {Pauli::X, Pauli::X});
  CHECK(b.n_terms() == 0);  // exact cancellation drops the term

  PauliOperator c(2);
  c.add_term(1.0, {Pauli::Z, Pauli::I});
  c.add_term(2.0, {Pauli::I, Pauli::Z});
  const PauliOperator d = 2.0 * a + c;
  CHECK(d.n_terms() == 3);
  CHECK(oracle::to_dense(d).isApprox(2.0 * oracle::to_dense(a) + oracle::to_dense(c), 1e-14));
}

TEST_CASE("invalid term construction throws") {
  PauliOperator op(2);
  CHECK_THROWS_AS(op.add_term(1.0, {Pauli::X}), std::invalid_argument);  // wrong label count
  CHECK_THROWS_AS(op.add_term(1.0, {{0, Pauli::X}, {0, Pauli::Z}}), std::invalid_argument);
  CHECK_THROWS_AS(op.add_term(1.0, {{2, Pauli::X}}), std::invalid_argument);
}

TEST_CASE("mutual commutation detection") {
  PauliOperator zz(3);
  zz.add_term(1.0, {{0, Pauli::Z}, {1, Pauli::Z}});
  zz.add_term(1.0, {{1, Pauli::Z}, {2, Pauli::Z}});
  CHECK(zz.terms_mutually_commute());

  PauliOperator xx_yy(2);
  xx_yy.add_term(1.0, {Pauli::X, Pauli::X});
  xx_yy.add_term(1.0, {Pauli::Y, Pauli::Y});
  CHECK(xx_yy.terms_mutually_commute());  // [XX, YY] = 0

  PauliOperator clash(2);
  clash.add_term(1.0, {{0, Pauli::X}});
  clash.add_term(1.0, {{0, Pauli::Z}});
  CHECK_FALSE(clash.terms_mutually_commute());

  // Overlapping flip-flop terms do not commute: [XX+YY on (0,1), same on (1,2)].
  PauliOperator hop(3);
  hop.add_term(1.0, {{0, Pauli::X}, {1, Pauli::X}});
  hop.add_term(1.0, {{1, Pauli::X}, {2, Pauli::X}});
  hop.add_term(1.0, {{0, Pauli::Y}, {1, Pauli::Y}});
  hop.add_term(1.0, {{1, Pauli::Y}, {2, Pauli::Y}});
  CHECK_FALSE(hop.terms_mutually_commute());
}

TEST_CASE("term_labels round-trips the masks") {
  PauliOperator op(3);
  op.add_term(0.3, {Pauli::X, Pauli::Y, Pauli::Z});
  const std::vector<Pauli> labels = op.term_labels(op.terms()[0]);
  REQUIRE(labels.size() == 3);
  CHECK(labels[0] == Pauli::X);
  CHECK(labels[1] == Pauli::Y);
  CHECK(labels[2] == Pauli::Z);
}

TEST_CASE("coeff_norm1 sums absolute coefficients") {
  PauliOperator op(2);
  op.add_term(0.5, {Pauli::X, Pauli::I});
  op.add_term(-1.5, {Pauli::I, Pauli::Z});
  CHECK(op.coeff_norm1() == doctest::Approx(2.0));
}

TEST_CASE("scale multiplies every coefficient") {
  PauliOperator op = oracle::random_operator(3, 5, 21);
  const Eigen::MatrixXcd before = oracle::to_dense(op);
  op.scale(-2.5);
  CHECK(oracle::to_dense(op).isApprox(-2.5 * before, 1e-14));
}
