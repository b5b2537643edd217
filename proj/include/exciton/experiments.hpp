#pragma once

#include <vector>

#include "exciton/observables.hpp"
#include "exciton/types.hpp"

namespace exciton::experiments {

// χ/g values of the reference comparison table.
inline const std::vector<double> kReferenceRatios = {0.0, 0.01, 0.34, 0.8};

inline constexpr double kDefaultHorizon = 600.0;
inline constexpr double kDefaultTimeTolerance = 1e-8;

// Coarse-grid candidates within this many nats of the grid maximum are
// refined.
inline constexpr double kRefineWindow = 0.05;

/// Uniform grid over [t_start, t_end] in units of gt; `steps` intervals,
/// steps + 1 samples.
struct TraceConfig {
  FockPair initial;
  ModelParams params;
  double t_start = 0.0;
  double t_end = 1.0;
  int steps = 2;

  void validate() const;
};

std::vector<ObservableSample> trace(const TraceConfig& config);

struct MaxSearchResult {
  double t_star = 0.0;  // gt of the maximum
  double e_star = 0.0;
  double gap = 0.0;     // ln(L+1) − e_star
  double coarse_max = 0.0;
  double coarse_step = 0.0;
  int refined_candidates = 0;
};

/// Global maximum of E(gt) on [0, t_max]: uniform scan whose step keeps the
/// fastest frequency in |β|² below π/8 per step, then golden-section
/// refinement of every promising local maximum down to `tol` in gt.
MaxSearchResult find_max_entanglement(const FockPair& initial,
                                      const ModelParams& params,
                                      double t_max = kDefaultHorizon,
                                      double tol = kDefaultTimeTolerance);

// Coarse spacing (in gt) chosen by find_max_entanglement.
double coarse_step(const FockPair& initial, const ModelParams& params);

struct MaxTableRow {
  int total = 0;
  double ratio = 0.0;
  MaxSearchResult result;
  double ln_l_plus_1() const;
};

/// find_max_entanglement for |L,0>, L = 1..l_max, times every ratio.
/// Rows are ordered by L then by ratio; cells may run on `threads` workers
/// (0 = hardware concurrency) without affecting the output.
std::vector<MaxTableRow> max_table(int l_max, const std::vector<double>& ratios,
                                   double t_max = kDefaultHorizon,
                                   unsigned threads = 0);

// Total gt on the grid with E >= fraction · ln(L+1).
double dwell_time(const TraceConfig& config, double fraction);

}  // namespace exciton::experiments
