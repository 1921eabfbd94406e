#include "stnc/fading.hpp"

namespace stnc {

FadingRealization draw_realization(const NetworkTopology& topo,
                                   const PowerAllocation& power,
                                   RandomStream& stream) {
  const std::vector<double> mean = mean_link_snrs(topo, power);
  FadingRealization real;
  real.link_snr.resize(mean.size());
  for (std::size_t l = 0; l < mean.size(); ++l)
    real.link_snr[l] = stream.next_exponential(mean[l]);
  return real;
}

ComplexGains draw_complex_gains(const NetworkTopology& topo, RandomStream& stream) {
  ComplexGains gains;
  gains.gain.resize(topo.links().n_links());
  for (int l = 0; l < topo.links().n_links(); ++l)
    gains.gain[l] = stream.next_cgaussian(topo.variance(l));
  return gains;
}

FadingRealization realization_from_gains(const NetworkTopology& topo,
                                         const PowerAllocation& power,
                                         const ComplexGains& gains) {
  const LinkSet& links = topo.links();
  const int k = links.n_relays();
  FadingRealization real;
  real.link_snr.resize(links.n_links());
  auto snr = [&](int l, Node u) {
    return power.power_of(u) * std::norm(gains.gain[l]) / power.n0();
  };
  for (int r = 1; r <= k; ++r)
    real.link_snr[links.source_to_relay(r)] = snr(links.source_to_relay(r), Node::source());
  real.link_snr[links.source_to_destination()] =
      snr(links.source_to_destination(), Node::source());
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j)
      real.link_snr[links.relay_to_relay(i, j)] =
          snr(links.relay_to_relay(i, j), Node::relay(i));
    real.link_snr[links.relay_to_destination(i)] =
        snr(links.relay_to_destination(i), Node::relay(i));
  }
  return real;
}

}  // namespace stnc
