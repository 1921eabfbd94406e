#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "stnc/model.hpp"
#include "stnc/rng.hpp"

namespace stnc {

struct ComplexGains;

// Baseband signal chain for one channel draw, built in relay order. Per-link
// tables are indexed by LinkSet id and describe the signal as seen by the
// link's receiver:
//   mrc[l]          the MRC coefficient phi_{u,v} (the combiner applies its
//                   conjugate)
//   noise_power[l]  the modeled noise power chi_{u,v} at the matched-filter
//                   output (N0 for source links, the amplified-noise recursion
//                   for relay links)
// a[r-1] is relay r's post-combining effective SNR, alpha[r-1] its amplifier
// factor (0 if the relay received nothing), a_d the combined coefficient at
// the destination. The noise model here treats all constituent noise terms as
// uncorrelated; a_d therefore reproduces the analytical end-to-end SNR.
struct ChainState {
  int n_relays;
  int n_symbols;
  std::vector<double> a;
  std::vector<double> alpha;
  std::vector<std::complex<double>> mrc;
  std::vector<double> noise_power;
  double a_d;
};

// One draw of every physical noise source feeding the symbol of interest,
// indexed by LinkSet id. Source->relay entries hold the (1/sqrt(M))-scaled
// sum of that relay's M per-slot receive noises, so every entry is CN(0, N0).
struct NoiseTrace {
  std::vector<std::complex<double>> sample;
};

NoiseTrace draw_noise_trace(const LinkSet& links, double n0, RandomStream& stream);

// Builds amplifier factors, MRC coefficients and the modeled noise powers for
// the given channel gains.
ChainState build_chain(const NetworkTopology& topo, const ComplexGains& gains,
                       const PowerAllocation& power, int m);

// SINR at the destination with the true, correlated noise: each relay's
// forwarded noise lump is shared by every node that hears that relay, which
// the modeled chain ignores. Computed exactly by propagating the linear
// coefficient of every primitive noise source to the destination; the noise
// power is then N0 * sum |coefficient|^2 with no sampling error.
double exact_sinr(const NetworkTopology& topo, const ComplexGains& gains,
                  const PowerAllocation& power, int m);

// Same quantity estimated empirically: draws n_noise independent noise traces,
// pushes each through the literal signal chain, and divides a_d^2 by the
// sample mean of |eta_d|^2.
double measure_empirical_sinr(const NetworkTopology& topo, const ComplexGains& gains,
                              const PowerAllocation& power, int m,
                              std::uint64_t n_noise, RandomStream& stream);

// Approximation gap of the analytical end-to-end SNR, aggregated over seeded
// channel draws. median/p95_rel_err compare the analytical SNR against
// exact_sinr (deterministic); empirical_median_rel_err is the same median
// with measure_empirical_sinr on n_noise traces, kept as a sampling-based
// cross-check.
struct GapStatistics {
  int n_relays;
  int n_symbols;
  double snr_db;
  double median_rel_err;
  double p95_rel_err;
  double empirical_median_rel_err;
  int n_channels;
  std::uint64_t n_noise;
};

GapStatistics lemma1_gap_report(const NetworkTopology& topo,
                                const PowerAllocation& power, int m,
                                int n_channels, std::uint64_t n_noise,
                                std::uint64_t seed);

std::string to_json(const GapStatistics& gap);

}  // namespace stnc
