#include "exciton/fock_oracle.hpp"

#include <cmath>

namespace exciton::oracle {

AngularMomentum angular_momentum(int total) {
  check_total(total);
  const int n = total + 1;
  const double j = 0.5 * total;
  AngularMomentum out{Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXcd::Zero(n, n),
                      Eigen::MatrixXd::Zero(n, n)};
  const std::complex<double> i_unit(0.0, 1.0);
  for (int r = 0; r < n; ++r) {
    const double m = r - j;
    out.z(r, r) = m;
    if (r + 1 < n) {
      // <m+1| J_+ |m> = sqrt((j − m)(j + m + 1))
      const double raise = std::sqrt((j - m) * (j + m + 1.0));
      out.x(r + 1, r) = out.x(r, r + 1) = 0.5 * raise;
      out.y(r + 1, r) = -0.5 * i_unit * raise;
      out.y(r, r + 1) = 0.5 * i_unit * raise;
    }
  }
  return out;
}

HamiltonianBlock build_hamiltonian_fock(int total, const ModelParams& params) {
  params.validate();
  const Eigen::MatrixXd jx = angular_momentum(total).x;
  const double l = total;
  const double shift = (params.omega - 2.0 * params.chi) * l + params.chi * l * l;
  const double coupling = params.g - 2.0 * params.chi + 2.0 * params.chi * l;
  Eigen::MatrixXd h = 2.0 * coupling * jx + 4.0 * params.chi * (jx * jx);
  h.diagonal().array() += shift;
  // J_x² is symmetric analytically; pin it bitwise.
  h = (0.5 * (h + h.transpose())).eval();
  return {total, h};
}

DiagonalizedBlock::DiagonalizedBlock(const HamiltonianBlock& block)
    : total_(block.total) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block.h);
  if (solver.info() != Eigen::Success) {
    throw InternalError("symmetric eigendecomposition failed");
  }
  eigenvalues_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
}

AmplitudeVector DiagonalizedBlock::propagate(const AmplitudeVector& state,
                                             double t) const {
  if (state.total != total_) {
    throw DomainError("state and Hamiltonian block have different L");
  }
  const Eigen::MatrixXcd v = vectors_.cast<std::complex<double>>();
  Eigen::VectorXcd rotated = v.adjoint() * state.beta;
  for (int k = 0; k <= total_; ++k) {
    rotated(k) *= std::polar(1.0, -eigenvalues_(k) * t);
  }
  return {total_, v * rotated};
}

AmplitudeVector evolve_by_diagonalization(const FockPair& initial,
                                          const ModelParams& params, double t) {
  initial.validate();
  const DiagonalizedBlock block(build_hamiltonian_fock(initial.total(), params));
  return block.propagate(AmplitudeVector::basis(initial.total(), initial.p), t);
}

Eigen::VectorXd spectrum(int total, const ModelParams& params) {
  return DiagonalizedBlock(build_hamiltonian_fock(total, params)).eigenvalues();
}

}  // namespace exciton::oracle
