#include "stnc/snr.hpp"

#include <stdexcept>

namespace stnc {

namespace {

void check_realization(const NetworkTopology& topo, const FadingRealization& real,
                       int m) {
  if (m < 1) throw std::invalid_argument("m: must be >= 1");
  if (static_cast<int>(real.link_snr.size()) != topo.links().n_links())
    throw std::invalid_argument("realization: link count does not match topology");
}

}  // namespace

std::vector<double> relay_effective_snrs(const NetworkTopology& topo,
                                         const FadingRealization& real, int m,
                                         Scheme scheme) {
  check_realization(topo, real, m);
  std::vector<double> a(topo.n_relays());
  end_to_end_snr(topo.links(), real.link_snr.data(), m, scheme, a.data());
  return a;
}

double end_to_end_snr(const NetworkTopology& topo, const FadingRealization& real,
                      int m, Scheme scheme) {
  check_realization(topo, real, m);
  std::vector<double> a(topo.n_relays());
  return end_to_end_snr(topo.links(), real.link_snr.data(), m, scheme, a.data());
}

EffectiveSnrVector effective_snr_vector(const NetworkTopology& topo,
                                        const FadingRealization& real, int m,
                                        Scheme scheme) {
  check_realization(topo, real, m);
  EffectiveSnrVector v;
  v.a.resize(topo.n_relays());
  v.gamma_e2e = end_to_end_snr(topo.links(), real.link_snr.data(), m, scheme,
                               v.a.data());
  return v;
}

}  // namespace stnc
