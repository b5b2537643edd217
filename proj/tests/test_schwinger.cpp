#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <random>

#include "exciton/fock_oracle.hpp"
#include "exciton/schwinger.hpp"

using namespace exciton;

namespace {

// exp(−i(π/2)J_y) = exp((π/2)K) with K = −iJ_y real antisymmetric, built
// here from the raising-operator elements.
Eigen::MatrixXd rotation_by_exponential(int total) {
  const int n = total + 1;
  const double j = 0.5 * total;
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
  for (int r = 0; r + 1 < n; ++r) {
    const double m = r - j;
    const double raise = std::sqrt((j - m) * (j + m + 1.0));
    k(r + 1, r) = -0.5 * raise;
    k(r, r + 1) = 0.5 * raise;
  }
  return (0.5 * M_PI * k).exp();
}

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

// Largest |a − e^{iφ} b| after aligning the phase on the biggest entry.
double phase_aligned_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  Eigen::Index k;
  b.cwiseAbs().maxCoeff(&k);
  const std::complex<double> phase = a(k) / b(k);
  const std::complex<double> unit = phase / std::abs(phase);
  return (a - unit * b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("Wigner matrix: trivial and oracle-checked entries") {
  const auto d0 = wigner_half_pi(0);
  REQUIRE(d0.d.rows() == 1);
  CHECK(d0.d(0, 0) == 1.0);

  // |entries| = √2/2 for spin 1/2.
  const auto d1 = wigner_half_pi(1);
  CHECK(max_abs(d1.d.cwiseAbs() - Eigen::MatrixXd::Constant(2, 2, M_SQRT1_2)) < 1e-15);

  for (int total = 0; total <= 16; ++total) {
    CAPTURE(total);
    const double sign = total % 2 == 0 ? 1.0 : -1.0;
    const Eigen::MatrixXd expected = sign * rotation_by_exponential(total);
    CHECK(max_abs(wigner_half_pi(total).d - expected) < 1e-12);
  }
}

TEST_CASE("Wigner matrix: orthogonality, sign symmetry, unit columns up to L_max") {
  for (int total = 0; total <= kMaxExcitons; ++total) {
    CAPTURE(total);
    const Eigen::MatrixXd d = wigner_half_pi(total).d;
    const int n = total + 1;
    CHECK(max_abs(d * d.transpose() - Eigen::MatrixXd::Identity(n, n)) < 1e-12);
    CHECK((d.colwise().norm().array() - 1.0).abs().maxCoeff() < 1e-12);
    double worst = 0.0;
    for (int rp = 0; rp < n; ++rp) {
      for (int r = 0; r < n; ++r) {
        // D_{m'm} = (−1)^{m−m'} D_{mm'}; m − m' = r − r'.
        const double sign = (r - rp) % 2 == 0 ? 1.0 : -1.0;
        worst = std::max(worst, std::abs(d(rp, r) - sign * d(r, rp)));
      }
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("Wigner matrix: log-factorial path agrees with the integer path") {
  for (int total = 0; total <= kMaxExcitons; ++total) {
    CAPTURE(total);
    const double diff = max_abs(wigner_half_pi(total).d - wigner_half_pi_lgamma(total).d);
    CHECK(diff < (total <= 10 ? 1e-13 : 1e-10));
  }
}

TEST_CASE("Wigner matrix: errors") {
  CHECK_THROWS_AS((wigner_half_pi(kMaxExcitons + 1)), CapacityError);
  CHECK_THROWS_AS((wigner_half_pi(-1)), DomainError);
  CHECK_THROWS_AS((wigner_half_pi_lgamma(kMaxExcitons + 1)), CapacityError);
}

TEST_CASE("eigen energies") {
  const ModelParams linear{1.0, 0.0, 0.0};
  CHECK(eigen_energy(1, 0.5, linear) == doctest::Approx(1.0));
  CHECK(eigen_energy(1, -0.5, linear) == doctest::Approx(-1.0));
  CHECK(eigen_energy(0, 0.0, ModelParams{2.0, 0.7, 3.0}) == 0.0);

  const ModelParams kerr{1.0, 0.34, 0.0};
  CHECK(std::abs(eigen_energy(2, 0.0, kerr)) < 1e-15);
  // Oracle: eigenvalues of the 3×3 block.
  const Eigen::VectorXd block = oracle::spectrum(2, kerr);
  Eigen::VectorXd analytic = eigen_energies(2, kerr);
  std::sort(analytic.begin(), analytic.end());
  CHECK((analytic - block).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(eigen_energy(2, 1.0, kerr) - eigen_energy(2, 0.0, kerr) ==
        doctest::Approx(2.0 * kerr.big_g(2) + 4.0 * kerr.chi));

  CHECK_THROWS_AS((eigen_energy(2, 0.5, kerr)), DomainError);
  CHECK_THROWS_AS((eigen_energy(2, 1.5, kerr)), DomainError);
  CHECK_THROWS_AS((eigen_energy(1, 0.3, kerr)), DomainError);
  CHECK_THROWS_AS((eigen_energy(1, NAN, kerr)), DomainError);
}

TEST_CASE("evolve: worked examples") {
  SUBCASE("one exciton reaches the balanced superposition at gt = pi/4") {
    const auto amps = evolve({1, 0}, ModelParams::from_ratio(0.77), M_PI / 4.0);
    CHECK(std::abs(std::abs(amps.beta(0)) - M_SQRT1_2) < 1e-12);
    CHECK(std::abs(std::abs(amps.beta(1)) - M_SQRT1_2) < 1e-12);
  }
  SUBCASE("t = 0 is the identity") {
    const auto amps = evolve({3, 2}, ModelParams{1.3, 0.4, 2.0}, 0.0);
    Eigen::VectorXcd expected = Eigen::VectorXcd::Zero(6);
    expected(3) = 1.0;
    CHECK((amps.beta - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("two excitons follow the closed-form coefficients") {
    const ModelParams params = ModelParams::from_ratio(0.34);
    const double t = 0.7;
    using std::polar;
    const auto fwd = polar(1.0, 2.0 * t);
    const auto back = polar(1.0, -2.0 * (1.0 + 4.0 * 0.34) * t);
    Eigen::VectorXcd alpha(3);
    alpha << 0.25 * (fwd + back - 2.0), (M_SQRT2 / 4.0) * (back - fwd),
        0.25 * (fwd + back + 2.0);
    const auto amps = evolve({2, 0}, params, t);
    CHECK((amps.beta.cwiseAbs() - alpha.cwiseAbs()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(phase_aligned_distance(amps.beta, alpha) < 1e-10);
  }
  SUBCASE("errors propagate") {
    CHECK_THROWS_AS((evolve({31, 0}, ModelParams{}, 1.0)), CapacityError);
    CHECK_THROWS_AS((evolve({1, 0}, ModelParams{}, NAN)), DomainError);
    CHECK_THROWS_AS((evolve({1, 0}, ModelParams{-1.0, 0.0, 0.0}, 1.0)), DomainError);
  }
}

TEST_CASE("evolve: properties over random draws") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> g_dist(0.5, 2.0), ratio(0.0, 1.0), omega(-5.0, 5.0),
      gt(0.0, 600.0);
  for (int total = 0; total <= 10; ++total) {
    std::uniform_int_distribution<int> split(0, total);
    for (int s = 0; s < 50; ++s) {
      const int p = split(rng);
      const double g = g_dist(rng);
      const ModelParams params = ModelParams::from_ratio(ratio(rng), g, omega(rng));
      const double t = gt(rng) / g;
      CAPTURE(total);
      CAPTURE(t);
      const FockPair initial{p, total - p};
      const auto amps = evolve(initial, params, t);
      CHECK(std::abs(amps.beta.squaredNorm() - 1.0) < 1e-10);

      const auto reference = oracle::evolve_by_diagonalization(initial, params, t);
      CHECK((amps.beta.cwiseAbs() - reference.beta.cwiseAbs()).cwiseAbs().maxCoeff() < 1e-10);
      CHECK(phase_aligned_distance(amps.beta, reference.beta) < 1e-9);

      ModelParams shifted = params;
      shifted.omega = params.omega + 5.0;
      const auto moved = evolve(initial, shifted, t);
      CHECK((amps.beta.cwiseAbs() - moved.beta.cwiseAbs()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("evolve: pure rotation is periodic in pi/g without Kerr term") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> gt(0.0, 100.0);
  for (int total = 1; total <= 10; ++total) {
    const ModelParams params{1.7, 0.0, 0.3};
    const double t = gt(rng) / params.g;
    const auto a = evolve({total, 0}, params, t);
    const auto b = evolve({total, 0}, params, t + M_PI / params.g);
    CHECK((a.beta.cwiseAbs() - b.beta.cwiseAbs()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("propagator spread bounds every energy difference") {
  const Propagator prop({4, 1}, ModelParams::from_ratio(0.34));
  const Eigen::VectorXd e = prop.energies();
  CHECK(prop.spectral_spread() == doctest::Approx(e.maxCoeff() - e.minCoeff()));
}
