#pragma once

#include "exciton/types.hpp"

namespace exciton {

/// Wigner's d-matrix D^{L/2}(π/2) for spin j = L/2.
///
/// The k-sum is regrouped into binomials,
///   D_{m'm} = 2^{-j} sqrt(C(L, j+m) / C(L, j+m')) Σ_k (−1)^{k−m−m'}
///             C(j+m, k) C(j−m, j−m'−k),
/// so the alternating sum is carried out exactly in 64-bit integers and only
/// the prefactor is rounded. Sign convention: D = (−1)^L <m'|e^{−iπJ_y/2}|m>.
WignerHalfPi wigner_half_pi(int total);

/// Same matrix from exponentiated log-factorials. Loses a few digits to
/// cancellation at the top of the range (about 1e-11 at L = 30); kept as an
/// independent evaluation for cross-checks.
WignerHalfPi wigner_half_pi_lgamma(int total);

/// E_{L/2,m} = ΩL + χL² + 2G_L m + 4χm².
double eigen_energy(const LadderIndex& index, const ModelParams& params);
double eigen_energy(int total, double m, const ModelParams& params);

// All L+1 eigenvalues, entry r for m = r − L/2.
Eigen::VectorXd eigen_energies(int total, const ModelParams& params);

/// Precomputed spectral form of the evolution from one Fock state.
///
/// β_{m'}(t) = Σ_m D_{m0,m} e^{−iE_m t} D_{m',m} with m0 = (p − q)/2.
class Propagator {
 public:
  Propagator(const FockPair& initial, const ModelParams& params);

  int total() const { return total_; }
  const Eigen::VectorXd& energies() const { return energies_; }

  // t is the physical time; multiply by g to get the figure axis gt.
  AmplitudeVector at(double t) const;

  // Largest eigenvalue difference, i.e. the fastest frequency in |β|².
  double spectral_spread() const;

 private:
  int total_;
  Eigen::VectorXd energies_;
  // 2G_L m + 4χm², kept apart from the m-independent ΩL + χL² so that ω
  // only ever enters through one global phase.
  Eigen::VectorXd splitting_;
  double offset_;
  Eigen::MatrixXcd weights_;
};

AmplitudeVector evolve(const FockPair& initial, const ModelParams& params,
                       double t);

}  // namespace exciton
