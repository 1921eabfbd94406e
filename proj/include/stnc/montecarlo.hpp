#pragma once

#include <cstdint>
#include <vector>

#include "stnc/closedform.hpp"
#include "stnc/model.hpp"

namespace stnc {

// Monte Carlo outage estimate with a 95% confidence interval. The interval
// uses the normal approximation, switching to the Wilson score interval when
// fewer than 10 outage events were seen (deep-tail points need an interval
// that stays honest near zero counts).
struct OutageEstimate {
  double p_hat;
  std::uint64_t n_trials;
  std::uint64_t n_outage;
  double std_err;  // sqrt(p_hat (1 - p_hat) / n_trials)
  double ci_lo;
  double ci_hi;
};

OutageEstimate make_outage_estimate(std::uint64_t n_outage, std::uint64_t n_trials);

// Estimates P[end-to-end SNR < outage threshold] over n_trials independent
// channel draws. Each trial uses its own substream of (seed, trial), so the
// result is bit-identical for any worker count. n_workers = 0 picks the
// hardware concurrency.
OutageEstimate estimate_outage(const NetworkTopology& topo,
                               const PowerAllocation& power, Scheme scheme,
                               double rate, std::uint64_t n_trials,
                               std::uint64_t seed, int n_workers = 0);

struct SnrSweepPoint {
  double snr_db;
  OutageEstimate estimate;
  double theorem1_raw;  // NaN for schemes the closed form does not cover
  double theorem1;      // clamped to [0,1]; NaN likewise
};

// Outage versus system SNR. At each grid point the per-node power is set so
// P/N0 matches the dB value under the equal split P_u = P_tot/(K+M). The same
// topology and seed are reused across points and schemes, so curves share
// their randomness (common random numbers).
std::vector<SnrSweepPoint> sweep_snr(const NetworkTopology& topo, Scheme scheme,
                                     double rate, const std::vector<double>& snr_db,
                                     std::uint64_t n_trials, std::uint64_t seed,
                                     int n_workers = 0);

struct CapacityPoint {
  int n_symbols;
  OutageEstimate estimate;
  double c_soc;  // M * (1 - p_hat) with B = R = 1 normalization applied by caller
};

// Sum outage capacity versus M at a fixed system SNR. The per-node power is
// held at the dB value for every M; threshold and combining weights are
// rebuilt per point. Bandwidth is normalized to 1.
std::vector<CapacityPoint> sweep_m(const NetworkTopology& topo, Scheme scheme,
                                   double rate, const std::vector<int>& m_grid,
                                   double snr_db, std::uint64_t n_trials,
                                   std::uint64_t seed, int n_workers = 0);

// Points suitable for a diversity-order fit: the highest-SNR contiguous run
// where the relative CI width (hi - lo)/p_hat is below 0.3, restricted to the
// top 10 dB of usable points.
std::vector<OutageCurvePoint> diversity_fit_points(
    const std::vector<SnrSweepPoint>& sweep);

}  // namespace stnc
