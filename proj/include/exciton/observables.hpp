#pragma once

#include <complex>

#include "exciton/types.hpp"

namespace exciton {

/// One row of a time trace. t is the dimensionless gt.
struct ObservableSample {
  double t = 0.0;
  double entropy = 0.0;
  double n1 = 0.0;
  double n2 = 0.0;
  double delta_n = 0.0;
};

struct Populations {
  double n1 = 0.0;
  double n2 = 0.0;
};

// Accepted deviation of Σ|β|² from one for caller-supplied vectors.
inline constexpr double kNormTolerance = 1e-8;

/// Entropy of entanglement in nats. The Fock ladder is already the Schmidt
/// basis, so this is the Shannon entropy of |β_r|² (0 ln 0 = 0).
double entropy_of_entanglement(const AmplitudeVector& amps);

Populations populations(const AmplitudeVector& amps);

// n1 − n2 = 2 Σ m' |β_{m'}|²
double population_difference(const AmplitudeVector& amps);

ObservableSample observe(const AmplitudeVector& amps, double gt);

// −cos²(gt) ln cos²(gt) − sin²(gt) ln sin²(gt), t physical.
double closed_form_entropy_l1(double t, const ModelParams& params);

struct L2Amplitudes {
  std::complex<double> a1;  // |0>_A |2>_B
  std::complex<double> a2;  // |1>_A |1>_B
  std::complex<double> a3;  // |2>_A |0>_B
};

// Coefficients for the |2,0> start with the global phase e^{−2i(Ω+2χ)t}
// dropped.
L2Amplitudes closed_form_amplitudes_l2(double t, const ModelParams& params);

// ΔN(t) = L cos^{L−1}(4χt) cos(2gt + 4(L−1)χt) for the |L,0> start.
double closed_form_imbalance(int total, double t, const ModelParams& params);

}  // namespace exciton
