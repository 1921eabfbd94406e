#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "stnc/fading.hpp"

using namespace stnc;

namespace {

// Two-sample Kolmogorov-Smirnov statistic.
double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j])
      ++i;
    else
      ++j;
    const double fa = double(i) / a.size();
    const double fb = double(j) / b.size();
    d = std::max(d, std::abs(fa - fb));
  }
  return d;
}

}  // namespace

TEST_CASE("link SNR draws have the configured mean") {
  NetworkTopology topo(0, 1, {2.0});
  PowerAllocation power(2.0, {}, 1.0);  // mean 4
  RandomStream stream(5);
  const int n = 1000000;
  double sum = 0;
  for (int i = 0; i < n; ++i) sum += draw_realization(topo, power, stream).link_snr[0];
  CHECK(std::abs(sum / n - 4.0) < 3.0 * 4.0 / std::sqrt(double(n)));
}

TEST_CASE("same (seed, trial) reproduces the realization; trials differ") {
  NetworkTopology topo = random_topology(2, 2, 0.1, 25.0, 3);
  PowerAllocation power = PowerAllocation::equal_split(40.0, 2, 2, 1.0);
  RandomStream s1 = realization_stream(17, 42);
  RandomStream s2 = realization_stream(17, 42);
  RandomStream s3 = realization_stream(17, 43);
  const FadingRealization a = draw_realization(topo, power, s1);
  const FadingRealization b = draw_realization(topo, power, s2);
  const FadingRealization c = draw_realization(topo, power, s3);
  CHECK(a.link_snr == b.link_snr);
  CHECK(a.link_snr != c.link_snr);
  for (double g : a.link_snr) {
    CHECK(g >= 0.0);
    CHECK(std::isfinite(g));
  }
}

TEST_CASE("complex gains have the configured power") {
  NetworkTopology topo(0, 1, {2.0});
  RandomStream stream(6);
  const int n = 1000000;
  double p = 0;
  for (int i = 0; i < n; ++i) p += std::norm(draw_complex_gains(topo, stream).gain[0]);
  CHECK(p / n == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("gain-derived SNR and direct SNR draws agree in distribution") {
  // same exponential law via two different sampling paths
  NetworkTopology topo(0, 1, {3.0});
  PowerAllocation power(2.5, {}, 2.0);
  const int n = 100000;
  std::vector<double> via_gains(n), direct(n);
  RandomStream sg(21), sd(22);
  for (int i = 0; i < n; ++i) {
    const ComplexGains g = draw_complex_gains(topo, sg);
    via_gains[i] = realization_from_gains(topo, power, g).link_snr[0];
    direct[i] = draw_realization(topo, power, sd).link_snr[0];
  }
  // 1% critical value: 1.6277 * sqrt(2/n)
  const double critical = 1.6277 * std::sqrt(2.0 / n);
  CHECK(ks_statistic(via_gains, direct) < critical);
}

TEST_CASE("realization_from_gains matches the definition link by link") {
  NetworkTopology topo = random_topology(3, 2, 0.5, 5.0, 9);
  PowerAllocation power(4.0, {2.0, 3.0, 5.0}, 2.0);
  RandomStream stream(10);
  const ComplexGains gains = draw_complex_gains(topo, stream);
  const FadingRealization real = realization_from_gains(topo, power, gains);
  const LinkSet& links = topo.links();
  CHECK(real.link_snr[links.source_to_relay(2)] ==
        doctest::Approx(4.0 * std::norm(gains.gain[links.source_to_relay(2)]) / 2.0));
  CHECK(real.link_snr[links.relay_to_relay(1, 3)] ==
        doctest::Approx(2.0 * std::norm(gains.gain[links.relay_to_relay(1, 3)]) / 2.0));
  CHECK(real.link_snr[links.relay_to_destination(3)] ==
        doctest::Approx(5.0 * std::norm(gains.gain[links.relay_to_destination(3)]) / 2.0));
}
