#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace exciton {

// Largest total exciton number any module accepts.
inline constexpr int kMaxExcitons = 30;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws CapacityError / DomainError unless 0 <= total <= kMaxExcitons.
void check_total(int total);

/// Physical rates of the symmetric two-mode model with hbar = 1.
///
/// Ω = ω − 2χ and G_L = g − 2χ + 2χL are derived on demand. Time is
/// measured in units of 1/g throughout the project, so the common choice is
/// g = 1 with chi given as the ratio χ/g.
struct ModelParams {
  double g = 1.0;
  double chi = 0.0;
  double omega = 0.0;

  static ModelParams from_ratio(double chi_over_g, double g = 1.0,
                                double omega = 0.0) {
    return ModelParams{g, chi_over_g * g, omega};
  }

  double big_omega() const { return omega - 2.0 * chi; }
  double big_g(int total) const { return g - 2.0 * chi + 2.0 * chi * total; }

  void validate() const;
};

/// Initial occupations (p in crystallite A, q in crystallite B).
struct FockPair {
  int p = 0;
  int q = 0;

  int total() const { return p + q; }
  // 2m = p - q of the Schwinger image |j = L/2, m>.
  int twice_m() const { return p - q; }

  void validate() const;
};

/// Row r = m + L/2 of the Schwinger ladder; r is also the occupation of A.
class LadderIndex {
 public:
  LadderIndex(int total, int row);
  static LadderIndex from_twice_m(int total, int twice_m);

  int total() const { return total_; }
  int row() const { return row_; }
  int twice_m() const { return 2 * row_ - total_; }
  double m() const { return 0.5 * twice_m(); }
  int occupation_a() const { return row_; }
  int occupation_b() const { return total_ - row_; }

 private:
  int total_;
  int row_;
};

/// D^{L/2}_{m'm}(π/2) stored with entry (r', r), r = m + L/2.
struct WignerHalfPi {
  int total = 0;
  Eigen::MatrixXd d;
};

/// Amplitudes over the Fock ladder; entry r is |r in A, L−r in B>.
struct AmplitudeVector {
  int total = 0;
  Eigen::VectorXcd beta;

  static AmplitudeVector basis(int total, int row);
  Eigen::VectorXd probabilities() const { return beta.cwiseAbs2(); }
};

}  // namespace exciton
