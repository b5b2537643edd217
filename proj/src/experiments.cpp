#include "exciton/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "exciton/schwinger.hpp"

namespace exciton::experiments {
namespace {

constexpr double kMaxPhasePerStep = M_PI / 8.0;

struct Probe {
  double gt;
  double entropy;
};

class EntropyCurve {
 public:
  EntropyCurve(const FockPair& initial, const ModelParams& params)
      : propagator_(initial, params), g_(params.g) {}

  double operator()(double gt) const {
    return entropy_of_entanglement(propagator_.at(gt / g_));
  }

 private:
  Propagator propagator_;
  double g_;
};

// Maximizes on [lo, hi]; returns the best probe seen.
Probe golden_section(const EntropyCurve& curve, double lo, double hi,
                     double tol) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = curve(c), fd = curve(d);
  Probe best = fc >= fd ? Probe{c, fc} : Probe{d, fd};
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = curve(c);
      if (fc > best.entropy) best = {c, fc};
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = curve(d);
      if (fd > best.entropy) best = {d, fd};
    }
  }
  return best;
}

}  // namespace

void TraceConfig::validate() const {
  initial.validate();
  params.validate();
  if (!(std::isfinite(t_start) && std::isfinite(t_end) && t_start >= 0.0 &&
        t_end > t_start)) {
    throw DomainError("trace needs 0 <= t_start < t_end");
  }
  if (steps < 2) throw DomainError("trace needs at least 2 steps");
}

std::vector<ObservableSample> trace(const TraceConfig& config) {
  config.validate();
  const Propagator propagator(config.initial, config.params);
  std::vector<ObservableSample> out;
  out.reserve(config.steps + 1);
  const double span = config.t_end - config.t_start;
  for (int i = 0; i <= config.steps; ++i) {
    const double gt = i == config.steps
                          ? config.t_end
                          : config.t_start + span * i / config.steps;
    out.push_back(observe(propagator.at(gt / config.params.g), gt));
  }
  return out;
}

double coarse_step(const FockPair& initial, const ModelParams& params) {
  const Propagator propagator(initial, params);
  const int total = initial.total();
  const double fastest_phase =
      std::abs(2.0 * params.big_g(total) + 4.0 * params.chi * total);
  const double frequency =
      std::max({propagator.spectral_spread(), fastest_phase, params.g});
  // Physical step times g gives the step in gt.
  return params.g * kMaxPhasePerStep / frequency;
}

MaxSearchResult find_max_entanglement(const FockPair& initial,
                                      const ModelParams& params, double t_max,
                                      double tol) {
  initial.validate();
  params.validate();
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw DomainError("t_max must be positive");
  }
  if (!(tol > 0.0)) throw DomainError("time tolerance must be positive");

  const int total = initial.total();
  const double ceiling = std::log(total + 1.0);
  MaxSearchResult result;
  if (total == 0) {
    result.gap = ceiling;
    return result;
  }

  const EntropyCurve curve(initial, params);
  const auto steps =
      static_cast<long>(std::ceil(t_max / coarse_step(initial, params)));
  const double h = t_max / static_cast<double>(steps);
  result.coarse_step = h;

  std::vector<double> grid(steps + 1);
  for (long i = 0; i <= steps; ++i) {
    grid[i] = curve(i == steps ? t_max : h * static_cast<double>(i));
  }
  const auto top = std::max_element(grid.begin(), grid.end());
  result.coarse_max = *top;
  result.e_star = *top;
  result.t_star = h * static_cast<double>(top - grid.begin());

  const double threshold = result.coarse_max - kRefineWindow;
  for (long i = 0; i <= steps; ++i) {
    const double e = grid[i];
    if (e < threshold) continue;
    const bool rises = i == 0 || e >= grid[i - 1];
    const bool falls = i == steps || e >= grid[i + 1];
    if (!rises || !falls) continue;
    ++result.refined_candidates;
    const double lo = h * static_cast<double>(std::max<long>(i - 1, 0));
    const double hi = std::min(h * static_cast<double>(i + 1), t_max);
    const Probe p = golden_section(curve, lo, hi, tol);
    if (p.entropy > result.e_star) {
      result.e_star = p.entropy;
      result.t_star = p.gt;
    }
  }
  result.gap = ceiling - result.e_star;
  return result;
}

double MaxTableRow::ln_l_plus_1() const { return std::log(total + 1.0); }

std::vector<MaxTableRow> max_table(int l_max, const std::vector<double>& ratios,
                                   double t_max, unsigned threads) {
  check_total(l_max);
  if (l_max < 1) throw DomainError("max table needs l_max >= 1");
  if (ratios.empty()) throw DomainError("max table needs at least one ratio");

  std::vector<MaxTableRow> rows;
  for (int total = 1; total <= l_max; ++total) {
    for (double ratio : ratios) rows.push_back({total, ratio, {}});
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, rows.size());

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(rows.size());
  auto work = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      MaxTableRow& row = rows[i];
      try {
        row.result = find_max_entanglement(
            FockPair{row.total, 0}, ModelParams::from_ratio(row.ratio), t_max);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(work);
    work();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

double dwell_time(const TraceConfig& config, double fraction) {
  const std::vector<ObservableSample> samples = trace(config);
  const double level = fraction * std::log(config.initial.total() + 1.0);
  const double spacing = (config.t_end - config.t_start) / config.steps;
  const auto hits = std::count_if(samples.begin(), samples.end(),
                                  [&](const ObservableSample& s) {
                                    return s.entropy >= level;
                                  });
  return spacing * static_cast<double>(hits);
}

}  // namespace exciton::experiments
