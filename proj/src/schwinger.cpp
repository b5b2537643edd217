#include "exciton/schwinger.hpp"

#include <array>
#include <cmath>
#include <cstdint>

namespace exciton {
namespace {

using BinomialTable = std::array<std::array<std::int64_t, kMaxExcitons + 1>,
                                 kMaxExcitons + 1>;

constexpr BinomialTable make_binomials() {
  BinomialTable c{};
  for (int n = 0; n <= kMaxExcitons; ++n) {
    c[n][0] = 1;
    for (int k = 1; k <= n; ++k) {
      c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
  return c;
}

constexpr BinomialTable kBinomial = make_binomials();

// 2^{-L/2}
double half_power(int total) {
  double v = std::ldexp(1.0, -(total / 2));
  return total % 2 == 0 ? v : v * M_SQRT1_2;
}

double log_factorial(int n) { return std::lgamma(n + 1.0); }

}  // namespace

WignerHalfPi wigner_half_pi(int total) {
  check_total(total);
  const int n = total + 1;
  WignerHalfPi out{total, Eigen::MatrixXd::Zero(n, n)};
  const double scale = half_power(total);
  for (int rp = 0; rp < n; ++rp) {
    for (int r = 0; r < n; ++r) {
      // a = j+m, b = j−m, c = j+m', d = j−m'
      const int a = r, b = total - r, c = rp, d = total - rp;
      std::int64_t sum = 0;
      for (int k = std::max(0, a - c); k <= std::min(a, d); ++k) {
        const std::int64_t term = kBinomial[a][k] * kBinomial[b][d - k];
        sum += ((k - r - rp + total) % 2 == 0) ? term : -term;
      }
      const double ratio = static_cast<double>(kBinomial[total][a]) /
                           static_cast<double>(kBinomial[total][c]);
      out.d(rp, r) = scale * std::sqrt(ratio) * static_cast<double>(sum);
    }
  }
  return out;
}

WignerHalfPi wigner_half_pi_lgamma(int total) {
  check_total(total);
  const int n = total + 1;
  WignerHalfPi out{total, Eigen::MatrixXd::Zero(n, n)};
  const double log_half = -0.5 * total * std::log(2.0);
  for (int rp = 0; rp < n; ++rp) {
    for (int r = 0; r < n; ++r) {
      const int a = r, b = total - r, c = rp, d = total - rp;
      const double log_num = 0.5 * (log_factorial(a) + log_factorial(b) +
                                    log_factorial(c) + log_factorial(d));
      double sum = 0.0;
      for (int k = std::max(0, a - c); k <= std::min(a, d); ++k) {
        const double log_den = log_factorial(a - k) + log_factorial(k) +
                               log_factorial(d - k) + log_factorial(k - a + c);
        const double mag = std::exp(log_half + log_num - log_den);
        sum += ((k - r - rp + total) % 2 == 0) ? mag : -mag;
      }
      out.d(rp, r) = sum;
    }
  }
  return out;
}

double eigen_energy(const LadderIndex& index, const ModelParams& params) {
  const double total = index.total();
  const double m = index.m();
  return params.big_omega() * total + params.chi * total * total +
         2.0 * params.big_g(index.total()) * m + 4.0 * params.chi * m * m;
}

double eigen_energy(int total, double m, const ModelParams& params) {
  const double twice_m = 2.0 * m;
  if (!std::isfinite(m) || twice_m != std::round(twice_m)) {
    throw DomainError("m must be an integer or half-odd integer");
  }
  if (std::abs(m) > 0.5 * total) {
    throw DomainError("|m| exceeds L/2");
  }
  return eigen_energy(
      LadderIndex::from_twice_m(total, static_cast<int>(twice_m)), params);
}

Eigen::VectorXd eigen_energies(int total, const ModelParams& params) {
  check_total(total);
  Eigen::VectorXd e(total + 1);
  for (int r = 0; r <= total; ++r) {
    e(r) = eigen_energy(LadderIndex(total, r), params);
  }
  return e;
}

Propagator::Propagator(const FockPair& initial, const ModelParams& params)
    : total_(initial.total()) {
  initial.validate();
  params.validate();
  energies_ = eigen_energies(total_, params);
  const double l = total_;
  offset_ = params.big_omega() * l + params.chi * l * l;
  splitting_.resize(total_ + 1);
  for (int r = 0; r <= total_; ++r) {
    const double m = LadderIndex(total_, r).m();
    splitting_(r) = 2.0 * params.big_g(total_) * m + 4.0 * params.chi * m * m;
  }
  const Eigen::MatrixXd d = wigner_half_pi(total_).d;
  const int r0 = initial.p;
  // weights(r', r) = D(r0, r) D(r', r)
  weights_ = (d * d.row(r0).transpose().asDiagonal()).cast<std::complex<double>>();
}

AmplitudeVector Propagator::at(double t) const {
  if (!std::isfinite(t)) {
    throw DomainError("evolution time must be finite");
  }
  Eigen::VectorXcd phase(total_ + 1);
  for (int r = 0; r <= total_; ++r) {
    phase(r) = std::polar(1.0, -splitting_(r) * t);
  }
  return AmplitudeVector{total_, std::polar(1.0, -offset_ * t) * (weights_ * phase)};
}

double Propagator::spectral_spread() const {
  return splitting_.maxCoeff() - splitting_.minCoeff();
}

AmplitudeVector evolve(const FockPair& initial, const ModelParams& params,
                       double t) {
  return Propagator(initial, params).at(t);
}

}  // namespace exciton
