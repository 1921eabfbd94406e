#include "stnc/baseband.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "stnc/fading.hpp"
#include "stnc/snr.hpp"

namespace stnc {

namespace {

// Nearest-rank percentile, q in (0, 1].
double percentile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  std::size_t idx = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n)));
  if (idx < 1) idx = 1;
  if (idx > n) idx = n;
  return v[idx - 1];
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

NoiseTrace draw_noise_trace(const LinkSet& links, double n0, RandomStream& stream) {
  NoiseTrace trace;
  trace.sample.resize(links.n_links());
  for (auto& z : trace.sample) z = stream.next_cgaussian(n0);
  return trace;
}

ChainState build_chain(const NetworkTopology& topo, const ComplexGains& gains,
                       const PowerAllocation& power, int m) {
  if (m < 1) throw std::invalid_argument("m: must be >= 1");
  const LinkSet& links = topo.links();
  if (static_cast<int>(gains.gain.size()) != links.n_links())
    throw std::invalid_argument("gains: link count does not match topology");
  const int k = links.n_relays();
  const double n0 = power.n0();

  ChainState st;
  st.n_relays = k;
  st.n_symbols = m;
  st.a.resize(k);
  st.alpha.resize(k);
  st.mrc.assign(links.n_links(), {0.0, 0.0});
  st.noise_power.assign(links.n_links(), n0);

  const double sqrt_ps = std::sqrt(power.p_source());
  for (int r = 1; r <= k; ++r) {
    const int l = links.source_to_relay(r);
    st.mrc[l] = sqrt_ps * gains.gain[l] / n0;
  }
  {
    const int l = links.source_to_destination();
    st.mrc[l] = sqrt_ps * gains.gain[l] / n0;
  }

  // Combine at a receiver: given the incoming link, the transmitting relay's
  // effective SNR and amplifier, fill chi and phi and return chi |phi|^2.
  auto relay_branch = [&](int l, double a_i, double alpha_i) {
    const std::complex<double> h = gains.gain[l];
    const double chi = n0 + m * std::norm(h) * alpha_i * alpha_i * a_i;
    const std::complex<double> phi = h * (alpha_i * a_i / chi);
    st.mrc[l] = phi;
    st.noise_power[l] = chi;
    return std::norm(phi) * chi;
  };

  for (int r = 1; r <= k; ++r) {
    double a_r = n0 * std::norm(st.mrc[links.source_to_relay(r)]);
    for (int i = 1; i < r; ++i)
      a_r += relay_branch(links.relay_to_relay(i, r), st.a[i - 1], st.alpha[i - 1]);
    st.a[r - 1] = a_r;
    st.alpha[r - 1] =
        a_r > 0.0 ? std::sqrt(power.p_relay(r) / (m * (a_r * a_r + a_r))) : 0.0;
  }

  double a_d = n0 * std::norm(st.mrc[links.source_to_destination()]);
  for (int r = 1; r <= k; ++r)
    a_d += relay_branch(links.relay_to_destination(r), st.a[r - 1], st.alpha[r - 1]);
  st.a_d = a_d;
  return st;
}

namespace {

// Linear coefficients of eta_d over the primitive noise sources (one per
// link id; source->relay entries are the normalized slot-sum lumps). Relay
// r's forwarded lump W_r enters every receiver that hears r, which is where
// the correlations the modeled chain drops come from:
//   W_r   = sqrt(M) [ phi*_{s,r} z_{s,r}
//                     + sum_{i<r} phi*_{i,r} (h_{i,r} alpha_i W_i + z_{i,r}) ]
//   eta_d = phi*_{s,d} z_{s,d} + sum_r phi*_{r,d} (h_{r,d} alpha_r W_r + z_{r,d})
std::vector<std::complex<double>> destination_noise_coefficients(
    const LinkSet& links, const ComplexGains& gains, const ChainState& st) {
  const int k = links.n_relays();
  const int n = links.n_links();
  const double sqrt_m = std::sqrt(static_cast<double>(st.n_symbols));

  std::vector<std::vector<std::complex<double>>> w(k);
  for (int r = 1; r <= k; ++r) {
    auto& wr = w[r - 1];
    wr.assign(n, {0.0, 0.0});
    wr[links.source_to_relay(r)] = sqrt_m * std::conj(st.mrc[links.source_to_relay(r)]);
    for (int i = 1; i < r; ++i) {
      const int l = links.relay_to_relay(i, r);
      const std::complex<double> c = sqrt_m * std::conj(st.mrc[l]);
      wr[l] += c;
      const std::complex<double> scale = c * gains.gain[l] * st.alpha[i - 1];
      if (scale != std::complex<double>{0.0, 0.0})
        for (int j = 0; j < n; ++j) wr[j] += scale * w[i - 1][j];
    }
  }

  std::vector<std::complex<double>> cd(n, {0.0, 0.0});
  cd[links.source_to_destination()] =
      std::conj(st.mrc[links.source_to_destination()]);
  for (int r = 1; r <= k; ++r) {
    const int l = links.relay_to_destination(r);
    const std::complex<double> c = std::conj(st.mrc[l]);
    cd[l] += c;
    const std::complex<double> scale = c * gains.gain[l] * st.alpha[r - 1];
    if (scale != std::complex<double>{0.0, 0.0})
      for (int j = 0; j < n; ++j) cd[j] += scale * w[r - 1][j];
  }
  return cd;
}

}  // namespace

double exact_sinr(const NetworkTopology& topo, const ComplexGains& gains,
                  const PowerAllocation& power, int m) {
  const ChainState st = build_chain(topo, gains, power, m);
  const auto cd = destination_noise_coefficients(topo.links(), gains, st);
  double noise = 0.0;
  for (const auto& c : cd) noise += std::norm(c);
  noise *= power.n0();
  return st.a_d * st.a_d / noise;
}

double measure_empirical_sinr(const NetworkTopology& topo, const ComplexGains& gains,
                              const PowerAllocation& power, int m,
                              std::uint64_t n_noise, RandomStream& stream) {
  if (n_noise < 1000) throw std::invalid_argument("n_noise: must be >= 1000");
  const ChainState st = build_chain(topo, gains, power, m);
  const LinkSet& links = topo.links();
  const int k = links.n_relays();
  const double sqrt_m = std::sqrt(static_cast<double>(m));

  std::vector<std::complex<double>> w(k);
  double acc = 0.0;
  for (std::uint64_t t = 0; t < n_noise; ++t) {
    const NoiseTrace trace = draw_noise_trace(links, power.n0(), stream);
    for (int r = 1; r <= k; ++r) {
      std::complex<double> wr =
          std::conj(st.mrc[links.source_to_relay(r)]) * trace.sample[links.source_to_relay(r)];
      for (int i = 1; i < r; ++i) {
        const int l = links.relay_to_relay(i, r);
        wr += std::conj(st.mrc[l]) *
              (gains.gain[l] * st.alpha[i - 1] * w[i - 1] + trace.sample[l]);
      }
      w[r - 1] = sqrt_m * wr;
    }
    std::complex<double> eta = std::conj(st.mrc[links.source_to_destination()]) *
                               trace.sample[links.source_to_destination()];
    for (int r = 1; r <= k; ++r) {
      const int l = links.relay_to_destination(r);
      eta += std::conj(st.mrc[l]) *
             (gains.gain[l] * st.alpha[r - 1] * w[r - 1] + trace.sample[l]);
    }
    acc += std::norm(eta);
  }
  return st.a_d * st.a_d / (acc / static_cast<double>(n_noise));
}

GapStatistics lemma1_gap_report(const NetworkTopology& topo,
                                const PowerAllocation& power, int m,
                                int n_channels, std::uint64_t n_noise,
                                std::uint64_t seed) {
  if (n_channels < 10) throw std::invalid_argument("n_channels: must be >= 10");
  RandomStream root(seed);
  std::vector<double> rel(n_channels), rel_emp(n_channels);
  for (int c = 0; c < n_channels; ++c) {
    RandomStream sub = root.child(c);
    const ComplexGains gains = draw_complex_gains(topo, sub);
    const FadingRealization real = realization_from_gains(topo, power, gains);
    const double analytical = end_to_end_snr(topo, real, m, Scheme::kStncOhaf);
    rel[c] = std::abs(analytical / exact_sinr(topo, gains, power, m) - 1.0);
    rel_emp[c] = std::abs(
        analytical / measure_empirical_sinr(topo, gains, power, m, n_noise, sub) -
        1.0);
  }
  GapStatistics gap;
  gap.n_relays = topo.n_relays();
  gap.n_symbols = m;
  gap.snr_db = 10.0 * std::log10(power.p_source() / power.n0());
  gap.median_rel_err = median(rel);
  gap.p95_rel_err = percentile(rel, 0.95);
  gap.empirical_median_rel_err = median(rel_emp);
  gap.n_channels = n_channels;
  gap.n_noise = n_noise;
  return gap;
}

std::string to_json(const GapStatistics& gap) {
  nlohmann::json j;
  j["K"] = gap.n_relays;
  j["M"] = gap.n_symbols;
  j["snr_db"] = gap.snr_db;
  j["median_rel_err"] = gap.median_rel_err;
  j["p95_rel_err"] = gap.p95_rel_err;
  j["empirical_median_rel_err"] = gap.empirical_median_rel_err;
  j["n_channels"] = gap.n_channels;
  j["n_noise"] = gap.n_noise;
  return j.dump(2);
}

}  // namespace stnc
