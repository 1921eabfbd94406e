#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "stnc/model.hpp"
#include "stnc/rng.hpp"

namespace stnc {

// Instantaneous link SNRs gamma_{u,v} for one channel draw, by LinkSet id.
struct FadingRealization {
  std::vector<double> link_snr;
};

// Complex channel gains h_{u,v} for one channel draw, by LinkSet id.
struct ComplexGains {
  std::vector<std::complex<double>> gain;
};

// Substream for one trial of one experiment. Pure in (seed, trial), so any
// partitioning of trials across workers reproduces the same draws.
inline RandomStream realization_stream(std::uint64_t seed, std::uint64_t trial) {
  return RandomStream(seed).child(trial);
}

// Draws each gamma_{u,v} independently exponential with mean P_u sigma^2 / N0.
// Consumes one variate per link, in LinkSet id order.
FadingRealization draw_realization(const NetworkTopology& topo,
                                   const PowerAllocation& power,
                                   RandomStream& stream);

// Draws each h_{u,v} ~ CN(0, sigma^2_{u,v}), in LinkSet id order.
ComplexGains draw_complex_gains(const NetworkTopology& topo, RandomStream& stream);

// Link SNRs implied by a set of complex gains: P_u |h|^2 / N0.
FadingRealization realization_from_gains(const NetworkTopology& topo,
                                         const PowerAllocation& power,
                                         const ComplexGains& gains);

}  // namespace stnc
