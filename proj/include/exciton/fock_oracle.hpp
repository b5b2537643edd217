#pragma once

#include "exciton/types.hpp"

// Brute-force reference path: the fixed-L Hamiltonian is assembled from
// ladder-operator matrix elements and propagated by dense diagonalization.
// Nothing here depends on the Wigner-formula code.
namespace exciton::oracle {

// J_x, J_y, J_z on the j = L/2 multiplet, ordered by r = m + L/2.
struct AngularMomentum {
  Eigen::MatrixXd x;
  Eigen::MatrixXcd y;
  Eigen::MatrixXd z;
};

AngularMomentum angular_momentum(int total);

struct HamiltonianBlock {
  int total = 0;
  Eigen::MatrixXd h;  // real symmetric, band width 2
};

// h = (ΩL + χL²) I + 2 G_L J_x + 4χ J_x²
HamiltonianBlock build_hamiltonian_fock(int total, const ModelParams& params);

/// h = V diag(E) Vᵀ, reusable for many propagation times.
class DiagonalizedBlock {
 public:
  explicit DiagonalizedBlock(const HamiltonianBlock& block);

  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  AmplitudeVector propagate(const AmplitudeVector& state, double t) const;

 private:
  int total_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd vectors_;
};

AmplitudeVector evolve_by_diagonalization(const FockPair& initial,
                                          const ModelParams& params, double t);

// Ascending eigenvalues of the block.
Eigen::VectorXd spectrum(int total, const ModelParams& params);

}  // namespace exciton::oracle
