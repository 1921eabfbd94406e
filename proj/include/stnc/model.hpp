#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace stnc {

// The three relaying schedules under study. The two STNC variants spend one
// slot per source symbol plus one slot per relay (M+K total); TDMA-OH spends
// M slots per relay on top of the source phase (M+M*K total).
enum class Scheme { kStncOhaf, kStncAf, kTdmaOh };

const char* scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);  // throws on unknown name

// A terminal: the source "s", a relay "1".."K", or the destination "d".
struct Node {
  enum class Kind { kSource, kRelay, kDestination };

  static Node source() { return {Kind::kSource, 0}; }
  static Node relay(int r) { return {Kind::kRelay, r}; }  // 1-based
  static Node destination() { return {Kind::kDestination, 0}; }

  std::string label() const;

  Kind kind;
  int index;  // relay index, 1..K; unused otherwise
};

// Dense indexing of the triangular forward-link set for K relays:
//   ids 0..K-1   : s->1 .. s->K
//   id  K        : s->d
//   then per relay i (ascending): i->i+1 .. i->K, i->d
// Total (K+1) + K(K+1)/2 links. Backward links do not exist.
class LinkSet {
 public:
  explicit LinkSet(int n_relays);

  int n_relays() const { return n_relays_; }
  int n_links() const { return n_links_; }

  int source_to_relay(int r) const { return r - 1; }
  int source_to_destination() const { return n_relays_; }
  int relay_to_relay(int i, int j) const { return relay_base(i) + (j - i - 1); }
  int relay_to_destination(int i) const { return relay_base(i) + (n_relays_ - i); }

  int index_of(Node u, Node v) const;  // throws for non-forward links
  std::string label(int link_id) const;    // e.g. "s->1", "2->d"

 private:
  // First id of relay i's outgoing block.
  int relay_base(int i) const { return i * (n_relays_ + 1) - i * (i - 1) / 2; }

  int n_relays_;
  int n_links_;
};

// Static description of the network: K relays, M symbols per period, and the
// Rayleigh variance of every forward link. Immutable once constructed.
class NetworkTopology {
 public:
  // variance[l] indexed by LinkSet id; all entries must be positive and finite.
  NetworkTopology(int n_relays, int n_symbols, std::vector<double> variance);

  // Builds from labelled entries ("s->1": 2.5, ...). The key set must match
  // the forward-link set exactly.
  static NetworkTopology from_variance_map(int n_relays, int n_symbols,
                                           const std::map<std::string, double>& variances);

  int n_relays() const { return links_.n_relays(); }
  int n_symbols() const { return n_symbols_; }
  const LinkSet& links() const { return links_; }
  double variance(int link_id) const { return variance_[link_id]; }
  const std::vector<double>& variances() const { return variance_; }

  // Same link table, different symbol count (used by the capacity sweep).
  NetworkTopology with_symbols(int n_symbols) const;

 private:
  LinkSet links_;
  int n_symbols_;
  std::vector<double> variance_;
};

// Transmit powers and the common noise power. Arbitrary per-node powers are
// allowed; the equal split P_s = P_r = P_tot/(K+M) is the usual configuration.
class PowerAllocation {
 public:
  PowerAllocation(double p_source, std::vector<double> p_relay, double n0);

  static PowerAllocation equal_split(double p_total, int n_relays, int n_symbols,
                                     double n0);
  // Equal split with per-node P chosen so that P/N0 equals the given dB value.
  static PowerAllocation from_system_snr_db(double snr_db, int n_relays,
                                            int n_symbols, double n0);

  double p_source() const { return p_source_; }
  double p_relay(int r) const { return p_relay_[r - 1]; }  // 1-based
  int n_relays() const { return static_cast<int>(p_relay_.size()); }
  double n0() const { return n0_; }
  double power_of(Node u) const;

 private:
  double p_source_;
  std::vector<double> p_relay_;
  double n0_;
};

// Slots consumed by one transmission period.
int slot_count(Scheme scheme, int m, int k);

// SNR threshold below which the per-symbol mutual information misses the
// target rate: 2^(slots*R) - 1.
double outage_threshold(Scheme scheme, int m, int k, double rate);

// Mean link SNR P_u * sigma^2_{u,v} / N0; its reciprocal is the exponential
// rate parameter zeta_{u,v}.
double mean_link_snr(const NetworkTopology& topo, const PowerAllocation& power,
                     Node u, Node v);

// All mean link SNRs, indexed by LinkSet id.
std::vector<double> mean_link_snrs(const NetworkTopology& topo,
                                   const PowerAllocation& power);

// Topology with every forward-link variance drawn uniformly from [lo, hi],
// deterministically from the seed.
NetworkTopology random_topology(int n_relays, int n_symbols, double lo, double hi,
                                std::uint64_t seed);

// One experiment operating point, serializable to/from JSON:
//   {"K":2, "M":2, "variances":{"s->1":..., ...}, "P_tot":30, "N0":1, "R":1}
struct Scenario {
  NetworkTopology topology;
  double p_total;
  double noise_power;
  double rate;
};

std::string to_json(const Scenario& scenario);
Scenario scenario_from_json(const std::string& text);

}  // namespace stnc
