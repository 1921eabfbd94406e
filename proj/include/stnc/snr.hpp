#pragma once

#include <vector>

#include "stnc/fading.hpp"
#include "stnc/model.hpp"

namespace stnc {

// Effective relay SNRs and the end-to-end SNR for one realization.
struct EffectiveSnrVector {
  std::vector<double> a;  // A_1..A_K
  double gamma_e2e;       // combined SNR at the destination
};

// One amplify-and-forward hop: the post-combining SNR contributed by feeding
// an effective SNR `a` through a link of instantaneous SNR `g`. Symmetric,
// bounded by min(a, g), and zero when either input is zero.
inline double af_combine(double a, double g) {
  const double d = a + g + 1.0;
  return a * g / d;  // d >= 1, so the origin is safe
}

// Weight applied to each overheard relay->relay contribution when building
// A_r, and to each relay->destination contribution when combining at D.
// The STNC schemes split relay power over M symbols per slot, hence 1/M;
// TDMA-OH sends one symbol per slot at full power. STNC-AF relays do not
// overhear at all.
inline double overhear_weight(Scheme scheme, int m) {
  switch (scheme) {
    case Scheme::kStncOhaf: return 1.0 / m;
    case Scheme::kStncAf: return 0.0;
    case Scheme::kTdmaOh: return 1.0;
  }
  return 0.0;
}

inline double destination_weight(Scheme scheme, int m) {
  return scheme == Scheme::kTdmaOh ? 1.0 : 1.0 / m;
}

// Core recursion, allocation-free: `gamma` indexed by LinkSet id, `a` is a
// caller-provided workspace of K entries that receives A_1..A_K.
//   A_r = gamma_{s,r} + w_oh * sum_{i<r} af_combine(A_i, gamma_{i,r})
//   Gamma = gamma_{s,d} + w_d * sum_r af_combine(A_r, gamma_{r,d})
inline double end_to_end_snr(const LinkSet& links, const double* gamma, int m,
                             Scheme scheme, double* a) {
  const int k = links.n_relays();
  const double w_oh = overhear_weight(scheme, m);
  const double w_d = destination_weight(scheme, m);
  for (int r = 1; r <= k; ++r) {
    double acc = gamma[links.source_to_relay(r)];
    if (w_oh != 0.0)
      for (int i = 1; i < r; ++i)
        acc += w_oh * af_combine(a[i - 1], gamma[links.relay_to_relay(i, r)]);
    a[r - 1] = acc;
  }
  double out = gamma[links.source_to_destination()];
  for (int r = 1; r <= k; ++r)
    out += w_d * af_combine(a[r - 1], gamma[links.relay_to_destination(r)]);
  return out;
}

// Effective SNRs A_1..A_K in relay order.
std::vector<double> relay_effective_snrs(const NetworkTopology& topo,
                                         const FadingRealization& real, int m,
                                         Scheme scheme);

// Convenience overloads on a full realization.
double end_to_end_snr(const NetworkTopology& topo, const FadingRealization& real,
                      int m, Scheme scheme);
EffectiveSnrVector effective_snr_vector(const NetworkTopology& topo,
                                        const FadingRealization& real, int m,
                                        Scheme scheme);

}  // namespace stnc
