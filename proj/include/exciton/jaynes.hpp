#pragma once

#include <vector>

#include "exciton/types.hpp"

// Maximum-entropy distributions p_n = xⁿ / Z on n = 0..L under a single
// mean-imbalance constraint Σ (2n − L) p_n = ΔN.
namespace exciton::jaynes {

enum class Endpoint { kNone, kAllInB, kAllInA };

struct JaynesSolution {
  int total = 0;
  double delta_n = 0.0;
  // x = e^{−λ}; log_x is ∓inf at the point-mass endpoints.
  double log_x = 0.0;
  double x = 1.0;
  double z = 1.0;
  double log_z = 0.0;
  double entropy = 0.0;
  Endpoint endpoint = Endpoint::kNone;
  Eigen::VectorXd p;

  double lambda() const { return -log_x; }
  // ½(L + ΔN) λ + ln Z; equals `entropy` away from the endpoints.
  double entropy_from_multiplier() const;
};

// Z = (x^{L+1} − 1)/(x − 1), and L + 1 at x = 1.
double partition_function(double x, int total);

// f(x) = L + 2/(1 − x) − 2(1 + L)/(1 − x^{L+1}), strictly increasing.
double mean_imbalance(double x, int total);

// Dispatches to the closed-form inverse for L = 2, bisection otherwise.
JaynesSolution solve_multiplier(double delta_n, int total);

// Always takes the bisection path (used to cross-check the L = 2 inverse).
JaynesSolution solve_multiplier_bisection(double delta_n, int total);

// x = (ΔN + sqrt(16 − 3ΔN²)) / (2(2 − ΔN)), for |ΔN| < 2.
double analytic_multiplier_l2(double delta_n);

double jaynes_entropy(double delta_n, int total);

struct EnvelopePoint {
  double delta_n;
  double entropy;
};

// Uniform ΔN grid over [−L, L] with `points` nodes (>= 2).
std::vector<EnvelopePoint> envelope(int total, int points);

}  // namespace exciton::jaynes
