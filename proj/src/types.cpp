#include "exciton/types.hpp"

#include <cmath>

namespace exciton {

void check_total(int total) {
  if (total < 0) {
    throw DomainError("total exciton number must be nonnegative, got " +
                      std::to_string(total));
  }
  if (total > kMaxExcitons) {
    throw CapacityError("total exciton number " + std::to_string(total) +
                        " exceeds L_max = " + std::to_string(kMaxExcitons));
  }
}

void ModelParams::validate() const {
  if (!(std::isfinite(g) && g > 0.0)) {
    throw DomainError("linear coupling g must be positive and finite");
  }
  if (!(std::isfinite(chi) && chi >= 0.0)) {
    throw DomainError("Kerr rate chi must be nonnegative and finite");
  }
  if (!std::isfinite(omega)) {
    throw DomainError("transition frequency omega must be finite");
  }
}

void FockPair::validate() const {
  if (p < 0 || q < 0) {
    throw DomainError("occupations must be nonnegative");
  }
  check_total(total());
}

LadderIndex::LadderIndex(int total, int row) : total_(total), row_(row) {
  check_total(total);
  if (row < 0 || row > total) {
    throw DomainError("ladder row " + std::to_string(row) +
                      " outside [0, " + std::to_string(total) + "]");
  }
}

LadderIndex LadderIndex::from_twice_m(int total, int twice_m) {
  if ((twice_m + total) % 2 != 0) {
    throw DomainError("2m and L must have the same parity");
  }
  return LadderIndex(total, (twice_m + total) / 2);
}

AmplitudeVector AmplitudeVector::basis(int total, int row) {
  LadderIndex idx(total, row);
  AmplitudeVector out{total, Eigen::VectorXcd::Zero(total + 1)};
  out.beta(idx.row()) = 1.0;
  return out;
}

}  // namespace exciton
