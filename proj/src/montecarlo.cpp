#include "stnc/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "stnc/fading.hpp"
#include "stnc/rng.hpp"
#include "stnc/snr.hpp"

namespace stnc {

namespace {

constexpr double kZ95 = 1.959963984540054;  // two-sided 95% normal quantile

std::uint64_t count_outages(const std::vector<double>& mean, const LinkSet& links,
                            int m, Scheme scheme, double threshold,
                            std::uint64_t seed, std::uint64_t begin,
                            std::uint64_t end) {
  const int n_links = links.n_links();
  std::vector<double> gamma(n_links);
  std::vector<double> a(std::max(links.n_relays(), 1));
  std::uint64_t outages = 0;
  for (std::uint64_t trial = begin; trial < end; ++trial) {
    RandomStream stream = realization_stream(seed, trial);
    for (int l = 0; l < n_links; ++l) gamma[l] = stream.next_exponential(mean[l]);
    const double snr = end_to_end_snr(links, gamma.data(), m, scheme, a.data());
    if (snr < threshold) ++outages;
  }
  return outages;
}

}  // namespace

OutageEstimate make_outage_estimate(std::uint64_t n_outage, std::uint64_t n_trials) {
  if (n_trials < 1) throw std::invalid_argument("n_trials: must be >= 1");
  if (n_outage > n_trials) throw std::invalid_argument("n_outage: exceeds n_trials");
  OutageEstimate e;
  e.n_trials = n_trials;
  e.n_outage = n_outage;
  const double n = static_cast<double>(n_trials);
  e.p_hat = static_cast<double>(n_outage) / n;
  e.std_err = std::sqrt(e.p_hat * (1.0 - e.p_hat) / n);
  if (n_outage < 10) {
    // Wilson score interval: stays inside [0,1] and nonempty at zero counts.
    const double z2 = kZ95 * kZ95;
    const double center = (static_cast<double>(n_outage) + z2 / 2.0) / (n + z2);
    const double half =
        kZ95 *
        std::sqrt(static_cast<double>(n_outage) * (n - static_cast<double>(n_outage)) / n +
                  z2 / 4.0) /
        (n + z2);
    e.ci_lo = std::max(0.0, center - half);
    e.ci_hi = std::min(1.0, center + half);
  } else {
    e.ci_lo = std::max(0.0, e.p_hat - kZ95 * e.std_err);
    e.ci_hi = std::min(1.0, e.p_hat + kZ95 * e.std_err);
  }
  return e;
}

OutageEstimate estimate_outage(const NetworkTopology& topo,
                               const PowerAllocation& power, Scheme scheme,
                               double rate, std::uint64_t n_trials,
                               std::uint64_t seed, int n_workers) {
  if (n_trials < 1) throw std::invalid_argument("n_trials: must be >= 1");
  const std::vector<double> mean = mean_link_snrs(topo, power);
  const double threshold =
      outage_threshold(scheme, topo.n_symbols(), topo.n_relays(), rate);

  if (n_workers <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    n_workers = hw > 0 ? static_cast<int>(hw) : 1;
  }
  const std::uint64_t per_worker = 200000;
  n_workers = static_cast<int>(std::min<std::uint64_t>(
      n_workers, std::max<std::uint64_t>(1, n_trials / per_worker + 1)));

  std::uint64_t total = 0;
  if (n_workers == 1) {
    total = count_outages(mean, topo.links(), topo.n_symbols(), scheme, threshold,
                          seed, 0, n_trials);
  } else {
    std::vector<std::uint64_t> counts(n_workers, 0);
    std::vector<std::thread> threads;
    threads.reserve(n_workers);
    for (int w = 0; w < n_workers; ++w) {
      const std::uint64_t begin = n_trials * w / n_workers;
      const std::uint64_t end = n_trials * (w + 1) / n_workers;
      threads.emplace_back([&, w, begin, end] {
        counts[w] = count_outages(mean, topo.links(), topo.n_symbols(), scheme,
                                  threshold, seed, begin, end);
      });
    }
    for (std::thread& t : threads) t.join();
    for (std::uint64_t c : counts) total += c;  // order-independent sum
  }
  return make_outage_estimate(total, n_trials);
}

std::vector<SnrSweepPoint> sweep_snr(const NetworkTopology& topo, Scheme scheme,
                                     double rate, const std::vector<double>& snr_db,
                                     std::uint64_t n_trials, std::uint64_t seed,
                                     int n_workers) {
  if (snr_db.empty()) throw std::invalid_argument("snr_db: grid must be nonempty");
  for (std::size_t i = 1; i < snr_db.size(); ++i)
    if (!(snr_db[i] > snr_db[i - 1]))
      throw std::invalid_argument("snr_db: grid must be strictly increasing");

  std::vector<SnrSweepPoint> out;
  out.reserve(snr_db.size());
  for (double db : snr_db) {
    const PowerAllocation power = PowerAllocation::from_system_snr_db(
        db, topo.n_relays(), topo.n_symbols(), 1.0);
    SnrSweepPoint p;
    p.snr_db = db;
    p.estimate = estimate_outage(topo, power, scheme, rate, n_trials, seed, n_workers);
    if (scheme == Scheme::kStncOhaf && topo.n_relays() >= 1) {
      p.theorem1_raw = theorem1_outage_raw(topo, power, rate);
      p.theorem1 = std::clamp(p.theorem1_raw, 0.0, 1.0);
    } else {
      p.theorem1_raw = std::numeric_limits<double>::quiet_NaN();
      p.theorem1 = std::numeric_limits<double>::quiet_NaN();
    }
    out.push_back(p);
  }
  return out;
}

std::vector<CapacityPoint> sweep_m(const NetworkTopology& topo, Scheme scheme,
                                   double rate, const std::vector<int>& m_grid,
                                   double snr_db, std::uint64_t n_trials,
                                   std::uint64_t seed, int n_workers) {
  if (m_grid.empty()) throw std::invalid_argument("m_grid: must be nonempty");
  std::vector<CapacityPoint> out;
  out.reserve(m_grid.size());
  for (int m : m_grid) {
    if (m < 1) throw std::invalid_argument("m_grid: entries must be >= 1");
    const NetworkTopology t = topo.with_symbols(m);
    const PowerAllocation power =
        PowerAllocation::from_system_snr_db(snr_db, t.n_relays(), m, 1.0);
    CapacityPoint p;
    p.n_symbols = m;
    p.estimate = estimate_outage(t, power, scheme, rate, n_trials, seed, n_workers);
    p.c_soc = sum_outage_capacity(p.estimate.p_hat, m, 1.0, rate);
    out.push_back(p);
  }
  return out;
}

std::vector<OutageCurvePoint> diversity_fit_points(
    const std::vector<SnrSweepPoint>& sweep) {
  auto usable = [](const SnrSweepPoint& p) {
    return p.estimate.p_hat > 0.0 &&
           (p.estimate.ci_hi - p.estimate.ci_lo) / p.estimate.p_hat < 0.3;
  };
  int hi = static_cast<int>(sweep.size()) - 1;
  while (hi >= 0 && !usable(sweep[hi])) --hi;
  if (hi < 0) return {};
  int lo = hi;
  while (lo > 0 && usable(sweep[lo - 1]) &&
         sweep[hi].snr_db - sweep[lo - 1].snr_db <= 10.0)
    --lo;
  std::vector<OutageCurvePoint> points;
  for (int i = lo; i <= hi; ++i)
    points.push_back({sweep[i].snr_db, sweep[i].estimate.p_hat});
  return points;
}

}  // namespace stnc
