#include "stnc/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stnc {

double theorem1_outage_raw(const NetworkTopology& topo, const PowerAllocation& power,
                           double rate) {
  const int k = topo.n_relays();
  if (k < 1)
    throw std::invalid_argument(
        "n_relays: closed form needs K >= 1; use exact_direct_outage for K = 0");
  const int m = topo.n_symbols();
  const double gamma_th = outage_threshold(Scheme::kStncOhaf, m, k, rate);

  auto zeta = [&](Node u, Node v) { return 1.0 / mean_link_snr(topo, power, u, v); };

  double value = zeta(Node::source(), Node::destination()) *
                 (zeta(Node::relay(1), Node::destination()) +
                  zeta(Node::source(), Node::relay(1)));
  for (int r = 2; r <= k; ++r) value *= zeta(Node::relay(r), Node::destination());
  for (int n = 0; n <= k; ++n) value *= gamma_th / (n + 1);
  return value;
}

double theorem1_outage(const NetworkTopology& topo, const PowerAllocation& power,
                       double rate) {
  return std::clamp(theorem1_outage_raw(topo, power, rate), 0.0, 1.0);
}

double exact_direct_outage(double zeta_sd, double gamma_th) {
  if (!(zeta_sd > 0.0)) throw std::invalid_argument("zeta_sd: must be positive");
  if (gamma_th < 0.0) throw std::invalid_argument("gamma_th: must be >= 0");
  return -std::expm1(-zeta_sd * gamma_th);
}

double sum_outage_capacity(double p_out, int m, double bandwidth, double rate) {
  if (p_out < 0.0 || p_out > 1.0)
    throw std::invalid_argument("p_out: must be in [0,1]");
  if (m < 1) throw std::invalid_argument("m: must be >= 1");
  return m * (1.0 - p_out) * bandwidth * rate;
}

double fit_diversity_order(const std::vector<OutageCurvePoint>& points) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  double prev_db = 0;
  for (const OutageCurvePoint& p : points) {
    if (n > 0 && !(p.snr_db > prev_db))
      throw std::invalid_argument("points: SNRs must be strictly increasing");
    prev_db = p.snr_db;
    if (!(p.p_out > 0.0)) continue;
    const double x = p.snr_db / 10.0;  // log10 of the linear SNR
    const double y = std::log10(p.p_out);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 3) throw std::invalid_argument("points: need >= 3 with p_out > 0");
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return -slope;
}

}  // namespace stnc
