#include "exciton/jaynes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace exciton::jaynes {
namespace {

constexpr double kUnitThresholdZ = 1e-6;
// Below this |ln x| the closed form for f cancels badly; sum directly.
constexpr double kUnitThresholdF = 1e-2;
constexpr double kBracketCap = 1024.0;

void check_x(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("Lagrange variable x must be positive and finite");
  }
}

struct Weights {
  Eigen::VectorXd p;
  double log_z;
};

// p_n = e^{un} / Z evaluated with the largest exponent shifted out.
Weights distribution(double u, int total) {
  const double shift = std::max(0.0, u * total);
  Eigen::VectorXd w(total + 1);
  for (int n = 0; n <= total; ++n) w(n) = std::exp(u * n - shift);
  const double sum = w.sum();
  return {w / sum, shift + std::log(sum)};
}

double direct_mean(double u, int total) {
  const Eigen::VectorXd p = distribution(u, total).p;
  double mean = 0.0;
  for (int n = 0; n <= total; ++n) mean += (2.0 * n - total) * p(n);
  return mean;
}

// f as a function of u = ln x.
double mean_from_log(double u, int total) {
  if (total == 0) return 0.0;
  if (std::abs(u) < kUnitThresholdF) return direct_mean(u, total);
  // f(1/x) = −f(x); evaluate on the x < 1 side where nothing overflows.
  const double v = -std::abs(u);
  const double l = total;
  const double f = l - 2.0 / std::expm1(v) + 2.0 * (l + 1.0) / std::expm1((l + 1.0) * v);
  return u > 0.0 ? -f : f;
}

void check_target(double delta_n, int total) {
  check_total(total);
  if (!std::isfinite(delta_n) || std::abs(delta_n) > total) {
    throw DomainError("population difference must satisfy |delta_n| <= L");
  }
}

double plogp(double p) { return p <= 0.0 ? 0.0 : p * std::log(p); }

JaynesSolution point_mass(double delta_n, int total) {
  JaynesSolution s;
  s.total = total;
  s.delta_n = delta_n;
  s.p = Eigen::VectorXd::Zero(total + 1);
  s.entropy = 0.0;
  if (total == 0) {
    s.p(0) = 1.0;
    return s;
  }
  if (delta_n > 0.0) {
    s.endpoint = Endpoint::kAllInA;
    s.p(total) = 1.0;
    s.log_x = std::numeric_limits<double>::infinity();
    s.x = s.z = s.log_z = std::numeric_limits<double>::infinity();
  } else {
    s.endpoint = Endpoint::kAllInB;
    s.p(0) = 1.0;
    s.log_x = -std::numeric_limits<double>::infinity();
    s.x = 0.0;
    s.z = 1.0;
    s.log_z = 0.0;
  }
  return s;
}

JaynesSolution from_log_x(double delta_n, int total, double u) {
  JaynesSolution s;
  s.total = total;
  s.delta_n = delta_n;
  s.log_x = u;
  s.x = std::exp(u);
  Weights w = distribution(u, total);
  s.log_z = w.log_z;
  s.z = std::exp(w.log_z);
  s.p = std::move(w.p);
  double e = 0.0;
  for (double pn : s.p) e -= plogp(pn);
  s.entropy = std::max(e, 0.0);
  return s;
}

bool is_endpoint(double delta_n, int total) {
  return total == 0 || std::abs(delta_n) == total;
}

}  // namespace

double JaynesSolution::entropy_from_multiplier() const {
  if (endpoint != Endpoint::kNone || total == 0) return 0.0;
  return 0.5 * (total + delta_n) * lambda() + log_z;
}

double partition_function(double x, int total) {
  check_x(x);
  check_total(total);
  if (std::abs(x - 1.0) < kUnitThresholdZ) {
    double z = 0.0;
    double power = 1.0;
    for (int n = 0; n <= total; ++n, power *= x) z += power;
    return z;
  }
  return std::expm1((total + 1.0) * std::log(x)) / (x - 1.0);
}

double mean_imbalance(double x, int total) {
  check_x(x);
  check_total(total);
  return mean_from_log(std::log(x), total);
}

double analytic_multiplier_l2(double delta_n) {
  if (!(std::abs(delta_n) < 2.0)) {
    throw DomainError("L = 2 inverse needs |delta_n| < 2");
  }
  const double root = std::sqrt(16.0 - 3.0 * delta_n * delta_n);
  // Rationalised numerator for ΔN < 0 avoids cancellation near ΔN = −2.
  if (delta_n < 0.0) return 2.0 * (2.0 + delta_n) / (root - delta_n);
  return (delta_n + root) / (2.0 * (2.0 - delta_n));
}

JaynesSolution solve_multiplier_bisection(double delta_n, int total) {
  check_target(delta_n, total);
  if (is_endpoint(delta_n, total)) return point_mass(delta_n, total);

  double bound = 1.0;
  while (bound < kBracketCap && (mean_from_log(bound, total) < delta_n ||
                                 mean_from_log(-bound, total) > delta_n)) {
    bound *= 2.0;
  }
  double lo = -bound;
  double hi = bound;
  // Run to machine resolution; the bracket halves at most ~1100 times.
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f = mean_from_log(mid, total);
    if (f == delta_n) {
      lo = hi = mid;
      break;
    }
    (f < delta_n ? lo : hi) = mid;
  }
  const double u = std::abs(mean_from_log(lo, total) - delta_n) <=
                           std::abs(mean_from_log(hi, total) - delta_n)
                       ? lo
                       : hi;
  return from_log_x(delta_n, total, u);
}

JaynesSolution solve_multiplier(double delta_n, int total) {
  check_target(delta_n, total);
  if (is_endpoint(delta_n, total)) return point_mass(delta_n, total);
  if (total == 2) {
    return from_log_x(delta_n, total, std::log(analytic_multiplier_l2(delta_n)));
  }
  return solve_multiplier_bisection(delta_n, total);
}

double jaynes_entropy(double delta_n, int total) {
  return solve_multiplier(delta_n, total).entropy;
}

std::vector<EnvelopePoint> envelope(int total, int points) {
  check_total(total);
  if (points < 2) throw DomainError("envelope grid needs at least 2 points");
  std::vector<EnvelopePoint> out;
  out.reserve(points);
  for (int i = 0; i < points; ++i) {
    double dn = -total + 2.0 * total * i / (points - 1);
    // Pin the endpoints so the grid hits ±L exactly.
    if (i == 0) dn = -total;
    if (i == points - 1) dn = total;
    out.push_back({dn, jaynes_entropy(dn, total)});
  }
  return out;
}

}  // namespace exciton::jaynes
