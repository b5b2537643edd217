#include "exciton/observables.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace exciton {
namespace {

constexpr double kZeroProbability = 1e-30;

Eigen::VectorXd checked_probabilities(const AmplitudeVector& amps) {
  if (amps.beta.size() != amps.total + 1) {
    throw DomainError("amplitude vector length does not match L + 1");
  }
  Eigen::VectorXd p = amps.probabilities();
  const double norm = p.sum();
  if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
    throw DomainError("amplitude vector is not normalized (sum |beta|^2 = " +
                      std::to_string(norm) + ")");
  }
  return p;
}

double plogp(double p) { return p < kZeroProbability ? 0.0 : p * std::log(p); }

}  // namespace

double entropy_of_entanglement(const AmplitudeVector& amps) {
  const Eigen::VectorXd p = checked_probabilities(amps);
  double e = 0.0;
  for (double pr : p) e -= plogp(pr);
  // Rounding can push a product state to −0 or a hair below.
  return std::max(e, 0.0);
}

Populations populations(const AmplitudeVector& amps) {
  const Eigen::VectorXd p = checked_probabilities(amps);
  double n1 = 0.0;
  for (int r = 0; r <= amps.total; ++r) n1 += r * p(r);
  // Norm rounding can push the mean a few ulps past its range.
  n1 = std::clamp(n1, 0.0, static_cast<double>(amps.total));
  return {n1, amps.total - n1};
}

double population_difference(const AmplitudeVector& amps) {
  const Populations n = populations(amps);
  return n.n1 - n.n2;
}

ObservableSample observe(const AmplitudeVector& amps, double gt) {
  const Populations n = populations(amps);
  return {gt, entropy_of_entanglement(amps), n.n1, n.n2, n.n1 - n.n2};
}

double closed_form_entropy_l1(double t, const ModelParams& params) {
  const double c = std::cos(params.g * t);
  const double s = std::sin(params.g * t);
  return -plogp(c * c) - plogp(s * s);
}

L2Amplitudes closed_form_amplitudes_l2(double t, const ModelParams& params) {
  using std::polar;
  const double g = params.g;
  const double chi = params.chi;
  const std::complex<double> fwd = polar(1.0, 2.0 * g * t);
  const std::complex<double> back = polar(1.0, -2.0 * (g + 4.0 * chi) * t);
  return {0.25 * (fwd + back - 2.0), (M_SQRT2 / 4.0) * (back - fwd),
          0.25 * (fwd + back + 2.0)};
}

double closed_form_imbalance(int total, double t, const ModelParams& params) {
  if (total <= 0) return 0.0;
  const double chi_t = params.chi * t;
  return total * std::pow(std::cos(4.0 * chi_t), total - 1) *
         std::cos(2.0 * params.g * t + 4.0 * (total - 1) * chi_t);
}

}  // namespace exciton
