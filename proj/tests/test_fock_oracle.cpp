#include <doctest.h>

#include <cmath>
#include <random>

#include "exciton/fock_oracle.hpp"
#include "exciton/schwinger.hpp"

using namespace exciton;

TEST_CASE("Hamiltonian block: small cases") {
  const auto h1 = oracle::build_hamiltonian_fock(1, ModelParams{1.0, 0.0, 0.0});
  Eigen::Matrix2d expected;
  expected << 0.0, 1.0, 1.0, 0.0;
  CHECK((h1.h - expected).cwiseAbs().maxCoeff() < 1e-15);
  const Eigen::VectorXd e1 = oracle::spectrum(1, ModelParams{1.0, 0.0, 0.0});
  CHECK(e1(0) == doctest::Approx(-1.0));
  CHECK(e1(1) == doctest::Approx(1.0));

  const auto h0 = oracle::build_hamiltonian_fock(0, ModelParams{1.0, 0.5, 2.0});
  REQUIRE(h0.h.rows() == 1);
  // (ω − 2χ)·0 + χ·0 = 0
  CHECK(h0.h(0, 0) == 0.0);
  CHECK(oracle::spectrum(0, ModelParams{1.0, 0.5, 2.0})(0) == 0.0);

  CHECK_THROWS_AS((oracle::build_hamiltonian_fock(31, ModelParams{})), CapacityError);
}

TEST_CASE("Hamiltonian block: symmetric and pentadiagonal") {
  for (int total = 0; total <= 12; ++total) {
    const auto block = oracle::build_hamiltonian_fock(total, ModelParams{1.1, 0.6, 0.4});
    CHECK(block.h == block.h.transpose());
    for (int r = 0; r <= total; ++r) {
      for (int c = 0; c <= total; ++c) {
        if (std::abs(r - c) > 2) CHECK(block.h(r, c) == 0.0);
      }
    }
  }
}

TEST_CASE("angular momentum algebra on each multiplet") {
  const std::complex<double> i_unit(0.0, 1.0);
  for (int total = 0; total <= 10; ++total) {
    CAPTURE(total);
    const auto j = oracle::angular_momentum(total);
    const Eigen::MatrixXcd x = j.x.cast<std::complex<double>>();
    const Eigen::MatrixXcd z = j.z.cast<std::complex<double>>();
    const Eigen::MatrixXcd& y = j.y;
    const double spin = 0.5 * total;
    const Eigen::MatrixXcd casimir = x * x + y * y + z * z;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(total + 1, total + 1);
    CHECK((casimir - spin * (spin + 1.0) * id).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((x * y - y * x - i_unit * z).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((y * z - z * y - i_unit * x).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("diagonalization propagator") {
  SUBCASE("identity at t = 0") {
    const auto amps = oracle::evolve_by_diagonalization({2, 3}, ModelParams{1.0, 0.3, 1.0}, 0.0);
    Eigen::VectorXcd expected = Eigen::VectorXcd::Zero(6);
    expected(2) = 1.0;
    CHECK((amps.beta - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("single exciton: cos(gt) on |1,0>, −i sin(gt) on |0,1>") {
    const ModelParams params{1.3, 0.45, 0.0};
    for (double gt : {0.2, 1.0, 2.5, 7.7}) {
      const double t = gt / params.g;
      const auto amps = oracle::evolve_by_diagonalization({1, 0}, params, t);
      Eigen::Vector2cd expected(std::complex<double>(0.0, -std::sin(gt)), std::cos(gt));
      const std::complex<double> overlap = expected.dot(amps.beta);
      const std::complex<double> phase = overlap / std::abs(overlap);
      CHECK((amps.beta - phase * expected).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  SUBCASE("unitarity and time composability") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> gt(0.0, 100.0), ratio(0.0, 1.0);
    for (int total = 0; total <= 10; ++total) {
      const ModelParams params = ModelParams::from_ratio(ratio(rng), 1.0, 0.7);
      const oracle::DiagonalizedBlock block(oracle::build_hamiltonian_fock(total, params));
      const auto start = AmplitudeVector::basis(total, total / 2);
      const double t1 = gt(rng), t2 = gt(rng);
      const auto once = block.propagate(start, t1 + t2);
      const auto twice = block.propagate(block.propagate(start, t1), t2);
      CHECK(std::abs(once.beta.squaredNorm() - 1.0) < 1e-12);
      CHECK((once.beta - twice.beta).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
  SUBCASE("mismatched state size") {
    const oracle::DiagonalizedBlock block(oracle::build_hamiltonian_fock(3, ModelParams{}));
    CHECK_THROWS_AS((block.propagate(AmplitudeVector::basis(2, 0), 1.0)), DomainError);
  }
}

TEST_CASE("spectrum equals the analytic eigenvalue multiset") {
  // L = 1, χ/g = 0.34: E(±1/2) = Ω + χ ± G_1 with G_1 = g.
  {
    const ModelParams params{1.0, 0.34, 0.0};
    const Eigen::VectorXd e = oracle::spectrum(1, params);
    const double base = (0.0 - 0.68) + 0.34;
    CHECK(std::abs(e(0) - (base - 1.0 + 0.34)) < 1e-12);
    CHECK(std::abs(e(1) - (base + 1.0 + 0.34)) < 1e-12);
  }
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> g(0.5, 2.0), ratio(0.0, 1.0), omega(-5.0, 5.0);
  for (int total = 0; total <= 15; ++total) {
    for (int s = 0; s < 20; ++s) {
      const ModelParams params = ModelParams::from_ratio(ratio(rng), g(rng), omega(rng));
      Eigen::VectorXd analytic = eigen_energies(total, params);
      std::sort(analytic.begin(), analytic.end());
      CHECK((analytic - oracle::spectrum(total, params)).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}
