#pragma once

#include <functional>
#include <string>
#include <vector>

#include "exciton/types.hpp"

namespace exciton::acceptance {

using EvolveFn =
    std::function<AmplitudeVector(const FockPair&, const ModelParams&, double)>;

struct Options {
  // Restrict the sweeps to L <= 5.
  bool quick = false;
  // Evolution under test; swapping it lets a corrupted build be checked.
  EvolveFn evolve;

  Options();
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string measured;
  std::string tolerance;
};

CriterionResult l1_exactness(const Options& opts);
CriterionResult l2_near_maximal(const Options& opts);
CriterionResult l3_near_maximal(const Options& opts);
CriterionResult split_equality_small_l(const Options& opts);
CriterionResult split_inequality_l5(const Options& opts);
CriterionResult nonlinear_beats_linear(const Options& opts);
CriterionResult imbalance_closed_forms(const Options& opts);
CriterionResult oracle_equivalence(const Options& opts);
CriterionResult jaynes_dominance(const Options& opts);
CriterionResult structural_invariants(const Options& opts);

std::vector<CriterionResult> run_all(const Options& opts);

// "PASS  3  name  measured=...  tolerance=..."
std::string format(const CriterionResult& result);

}  // namespace exciton::acceptance
