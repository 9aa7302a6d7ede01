#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "test_util.hpp"
#include "wqed/analysis.hpp"
#include "wqed/ansatz.hpp"
#include "wqed/state.hpp"

using wqed::DensityMatrix;
using wqed::RunRecord;
using wqed::StateVector;

namespace {

RunRecord metric_record(const std::string& id, int n, int depth, std::uint64_t seed,
                        double infidelity) {
  RunRecord r;
  r.ansatz_id = id;
  r.n_qubits = n;
  r.depth = depth;
  r.seed = seed;
  r.infidelity = infidelity;
  return r;
}

}  // namespace

TEST_CASE("pure-state infidelity against a subspace") {
  const Eigen::VectorXcd a = oracle::random_state(3, 1);
  Eigen::MatrixXcd basis(8, 1);
  basis.col(0) = a;

  StateVector psi(3);
  psi.amps = a;
  CHECK(wqed::infidelity(psi, basis) == doctest::Approx(0.0).epsilon(1e-12));

  // An orthogonal state has infidelity one.
  Eigen::VectorXcd b = oracle::random_state(3, 2);
  b -= a * a.dot(b);
  b.normalize();
  psi.amps = b;
  CHECK(wqed::infidelity(psi, basis) == doctest::Approx(1.0).epsilon(1e-12));

  // Membership in a two-dimensional subspace.
  Eigen::MatrixXcd basis2(8, 2);
  basis2.col(0) = a;
  basis2.col(1) = b;
  psi.amps = (0.6 * a + 0.8 * b).normalized();
  CHECK(wqed::infidelity(psi, basis2) == doctest::Approx(0.0).epsilon(1e-12));

  // Non-orthonormal bases are rejected.
  Eigen::MatrixXcd bad(8, 2);
  bad.col(0) = a;
  bad.col(1) = a;
  CHECK_THROWS_AS(wqed::infidelity(psi, bad), std::invalid_argument);
}

TEST_CASE("infidelity is invariant under a basis rotation of the subspace") {
  const Eigen::VectorXcd a = oracle::random_state(3, 5);
  Eigen::VectorXcd b = oracle::random_state(3, 6);
  b -= a * a.dot(b);
  b.normalize();
  Eigen::MatrixXcd basis(8, 2);
  basis << a, b;

  // Unitary mix of the two columns spans the same space.
  Eigen::Matrix2cd mix;
  const double c = std::cos(0.7), s = std::sin(0.7);
  mix << c, -s, s, c;
  const Eigen::MatrixXcd rotated = basis * mix;

  StateVector psi(3);
  psi.amps = oracle::random_state(3, 7);
  CHECK(wqed::infidelity(psi, basis) ==
        doctest::Approx(wqed::infidelity(psi, rotated)).epsilon(1e-12));
}

TEST_CASE("mixed-state infidelity extends the pure one") {
  const Eigen::VectorXcd a = oracle::random_state(2, 3);
  Eigen::MatrixXcd basis(4, 1);
  basis.col(0) = a;

  StateVector psi(2);
  psi.amps = a;
  const DensityMatrix pure = wqed::to_density(psi);
  CHECK(wqed::mixed_infidelity(pure, basis) == doctest::Approx(0.0).epsilon(1e-10));

  StateVector other(2);
  other.amps = oracle::random_state(2, 8);
  const DensityMatrix rho = wqed::to_density(other);
  CHECK(wqed::mixed_infidelity(rho, basis) ==
        doctest::Approx(wqed::infidelity(other, basis)).epsilon(1e-10));

  // Maximally mixed state against a one-dimensional basis: 1 - sqrt(1/4).
  CHECK(wqed::mixed_infidelity(wqed::maximally_mixed(2), basis) == doctest::Approx(0.5));
}

TEST_CASE("residual energy normalization and clipping") {
  bool clipped = false;
  CHECK(wqed::residual_energy(0.0, -2.0, 2.0, &clipped) == doctest::Approx(0.5));
  CHECK_FALSE(clipped);
  CHECK(wqed::residual_energy(-2.0, -2.0, 2.0, &clipped) == doctest::Approx(0.0));
  CHECK_FALSE(clipped);

  // Affine shifts of the spectrum leave the residual unchanged.
  const double r0 = wqed::residual_energy(-0.5, -2.0, 2.0);
  CHECK(wqed::residual_energy(3.0 * -0.5 + 1, 3.0 * -2.0 + 1, 3.0 * 2.0 + 1) ==
        doctest::Approx(r0).epsilon(1e-12));

  // Overshoot below the ground energy clips to 0 and raises the flag.
  CHECK(wqed::residual_energy(-2.1, -2.0, 2.0, &clipped) == doctest::Approx(0.0));
  CHECK(clipped);
  CHECK(wqed::residual_energy(2.4, -2.0, 2.0, &clipped) == doctest::Approx(1.0));
  CHECK(clipped);
  // A sub-tolerance overshoot is clipped silently.
  CHECK(wqed::residual_energy(-2.0 - 1e-12, -2.0, 2.0, &clipped) == doctest::Approx(0.0));
  CHECK_FALSE(clipped);

  CHECK_THROWS_AS(wqed::residual_energy(0.0, 2.0, -2.0), std::invalid_argument);
}

TEST_CASE("minimum-depth sweep over synthetic records") {
  std::vector<RunRecord> records;
  // Ansatz A at n=4 crosses the 0.99 threshold at depth 2 on its best seed.
  records.push_back(metric_record("a", 4, 1, 0, 0.5));
  records.push_back(metric_record("a", 4, 1, 1, 0.02));
  records.push_back(metric_record("a", 4, 2, 0, 0.05));
  records.push_back(metric_record("a", 4, 2, 1, 0.005));
  // Ansatz B never reaches it and has a hole at depth 2.
  records.push_back(metric_record("b", 4, 1, 0, 0.3));
  records.push_back(metric_record("b", 4, 3, 0, 0.2));
  // A failed record and a metric-less record must be ignored.
  RunRecord failed = metric_record("a", 4, 1, 2, 0.001);
  failed.failed = true;
  records.push_back(failed);
  RunRecord empty = metric_record("a", 4, 1, 3, 0.0);
  empty.infidelity.reset();
  records.push_back(empty);

  const auto sweep = wqed::min_depth_sweep(records, 0.99);
  REQUIRE(sweep.size() == 2);
  const auto& a = sweep[0].ansatz_id == "a" ? sweep[0] : sweep[1];
  const auto& b = sweep[0].ansatz_id == "a" ? sweep[1] : sweep[0];
  CHECK(a.reached);
  CHECK(a.d_min == 2);
  CHECK(a.missing_depths.empty());
  CHECK_FALSE(b.reached);
  CHECK(b.missing_depths == std::vector<int>{2});
}

TEST_CASE("Marchenko-Pastur distribution function") {
  CHECK(wqed::mp_cdf(-1.0) == 0.0);
  CHECK(wqed::mp_cdf(0.0) == 0.0);
  CHECK(wqed::mp_cdf(4.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(wqed::mp_cdf(5.0) == 1.0);
  // F(2) = (4 asin(sqrt(1/2)) + 2) / (2 pi) = (pi + 2) / (2 pi).
  CHECK(wqed::mp_cdf(2.0) ==
        doctest::Approx((std::numbers::pi + 2.0) / (2.0 * std::numbers::pi)).epsilon(1e-12));
  // Monotone, and its numerical derivative matches the density.
  for (double x : {0.5, 1.0, 2.5, 3.5}) {
    const double h = 1e-6;
    const double fd = (wqed::mp_cdf(x + h) - wqed::mp_cdf(x - h)) / (2 * h);
    const double density = std::sqrt(4.0 / x - 1.0) / (2 * std::numbers::pi);
    CHECK(fd == doctest::Approx(density).epsilon(1e-5));
  }
}

TEST_CASE("Kolmogorov-Smirnov distance inspects both staircase corners") {
  // Quantile samples sit symmetrically: sup deviation is exactly 1/(2n) + 0.
  const int n = 10;
  std::vector<double> samples;
  for (int i = 0; i < n; ++i) {
    // x with F(x) = (i + 0.5) / n, found by bisection on the CDF.
    double lo = 0.0, hi = 4.0, want = (i + 0.5) / n;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      (wqed::mp_cdf(mid) < want ? lo : hi) = mid;
    }
    samples.push_back(0.5 * (lo + hi));
  }
  CHECK(wqed::ks_distance(samples, &wqed::mp_cdf) == doctest::Approx(0.05).epsilon(1e-6));

  // A point mass far below the support has distance 1 - F(0+) = 1.
  CHECK(wqed::ks_distance({-5.0}, &wqed::mp_cdf) == doctest::Approx(1.0));
}

TEST_CASE("entanglement spectrum sampling") {
  const wqed::Circuit c = wqed::build_ansatz("hea", 4, 2);
  const wqed::SpectrumSamples s = wqed::entanglement_spectrum(c, 6, 17);
  CHECK(s.n_samples == 6);
  CHECK(static_cast<int>(s.eigenvalues.size()) == 6 * 4);  // 2^{n/2} per sample
  CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
  CHECK(s.ks_distance >= 0.0);
  CHECK(s.ks_distance <= 1.0);
  // Rescaled eigenvalues of each reduced state sum to 2^{n/2}: the pooled
  // mean is exactly one.
  double mean = 0.0;
  for (double v : s.eigenvalues) mean += v;
  mean /= static_cast<double>(s.eigenvalues.size());
  CHECK(mean == doctest::Approx(1.0).epsilon(1e-10));

  // Deterministic in the seed.
  const wqed::SpectrumSamples again = wqed::entanglement_spectrum(c, 6, 17);
  CHECK(again.ks_distance == s.ks_distance);

  const wqed::Circuit odd = wqed::build_ansatz("wqed-i", 3, 1);
  CHECK_THROWS_AS(wqed::entanglement_spectrum(odd, 4, 0), std::invalid_argument);
}
