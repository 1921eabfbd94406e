#pragma once

#include <vector>

#include "stnc/model.hpp"

namespace stnc {

struct OutageCurvePoint {
  double snr_db;  // system SNR P/N0 in dB
  double p_out;
};

// Closed-form high-SNR outage approximation for the overhearing scheme with
// K >= 1 relays:
//   [(K+1)!]^-1 * (2^{(M+K)R} - 1)^{K+1}
//     * zeta_{s,d} * (zeta_{1,d} + zeta_{s,1}) * prod_{r=2..K} zeta_{r,d}
// where zeta_{u,v} = 1/mean_link_snr(u,v). Implemented exactly as printed:
// relay 1 contributes both its source and destination rates, later relays
// only their destination rate. The raw value is a tail approximation and can
// exceed 1 at low SNR.
double theorem1_outage_raw(const NetworkTopology& topo, const PowerAllocation& power,
                           double rate);

// Same, clamped to [0,1] for reporting.
double theorem1_outage(const NetworkTopology& topo, const PowerAllocation& power,
                       double rate);

// Exact no-relay outage: P[gamma_{s,d} < gamma_th] for an exponential link.
double exact_direct_outage(double zeta_sd, double gamma_th);

// Sum outage capacity M * (1 - p_out) * B * R.
double sum_outage_capacity(double p_out, int m, double bandwidth, double rate);

// Least-squares slope of log10(p_out) against log10(linear SNR), negated.
// Points with p_out = 0 are skipped; fewer than 3 usable points is an error.
double fit_diversity_order(const std::vector<OutageCurvePoint>& points);

}  // namespace stnc
