#include "stnc/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "stnc/rng.hpp"

namespace stnc {

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::kStncOhaf: return "STNC-OHAF";
    case Scheme::kStncAf: return "STNC-AF";
    case Scheme::kTdmaOh: return "TDMA-OH";
  }
  throw std::invalid_argument("scheme: unknown value");
}

Scheme scheme_from_name(const std::string& name) {
  if (name == "STNC-OHAF") return Scheme::kStncOhaf;
  if (name == "STNC-AF") return Scheme::kStncAf;
  if (name == "TDMA-OH") return Scheme::kTdmaOh;
  throw std::invalid_argument("scheme: unknown name '" + name + "'");
}

std::string Node::label() const {
  switch (kind) {
    case Kind::kSource: return "s";
    case Kind::kRelay: return std::to_string(index);
    case Kind::kDestination: return "d";
  }
  throw std::invalid_argument("node: unknown kind");
}

LinkSet::LinkSet(int n_relays) : n_relays_(n_relays) {
  if (n_relays < 0) throw std::invalid_argument("n_relays: must be >= 0");
  n_links_ = (n_relays + 1) + n_relays * (n_relays + 1) / 2;
}

int LinkSet::index_of(Node u, Node v) const {
  const bool v_relay = v.kind == Node::Kind::kRelay;
  const bool v_dest = v.kind == Node::Kind::kDestination;
  if (v_relay && (v.index < 1 || v.index > n_relays_))
    throw std::invalid_argument("link: relay index out of range");
  if (u.kind == Node::Kind::kSource) {
    if (v_relay) return source_to_relay(v.index);
    if (v_dest) return source_to_destination();
  } else if (u.kind == Node::Kind::kRelay) {
    if (u.index < 1 || u.index > n_relays_)
      throw std::invalid_argument("link: relay index out of range");
    if (v_relay && v.index > u.index) return relay_to_relay(u.index, v.index);
    if (v_dest) return relay_to_destination(u.index);
  }
  throw std::invalid_argument("link: " + u.label() + "->" + v.label() +
                              " is not a forward link");
}

std::string LinkSet::label(int link_id) const {
  if (link_id < 0 || link_id >= n_links_)
    throw std::invalid_argument("link: id out of range");
  if (link_id < n_relays_) return "s->" + std::to_string(link_id + 1);
  if (link_id == n_relays_) return "s->d";
  for (int i = 1; i <= n_relays_; ++i) {
    const int base = relay_base(i);
    const int end = base + (n_relays_ - i);  // id of i->d
    if (link_id <= end) {
      const std::string from = std::to_string(i);
      if (link_id == end) return from + "->d";
      return from + "->" + std::to_string(i + 1 + (link_id - base));
    }
  }
  throw std::logic_error("link: bad id arithmetic");
}

NetworkTopology::NetworkTopology(int n_relays, int n_symbols,
                                 std::vector<double> variance)
    : links_(n_relays), n_symbols_(n_symbols), variance_(std::move(variance)) {
  if (n_symbols < 1) throw std::invalid_argument("n_symbols: must be >= 1");
  if (static_cast<int>(variance_.size()) != links_.n_links())
    throw std::invalid_argument("variance: expected one entry per forward link");
  for (int l = 0; l < links_.n_links(); ++l) {
    const double v = variance_[l];
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument("variance: " + links_.label(l) +
                                  " must be positive and finite");
  }
}

NetworkTopology NetworkTopology::from_variance_map(
    int n_relays, int n_symbols, const std::map<std::string, double>& variances) {
  LinkSet links(n_relays);
  if (static_cast<int>(variances.size()) != links.n_links())
    throw std::invalid_argument("variances: expected " +
                                std::to_string(links.n_links()) + " entries, got " +
                                std::to_string(variances.size()));
  std::vector<double> table(links.n_links());
  for (int l = 0; l < links.n_links(); ++l) {
    const auto it = variances.find(links.label(l));
    if (it == variances.end())
      throw std::invalid_argument("variances: missing link " + links.label(l));
    table[l] = it->second;
  }
  return NetworkTopology(n_relays, n_symbols, std::move(table));
}

NetworkTopology NetworkTopology::with_symbols(int n_symbols) const {
  return NetworkTopology(links_.n_relays(), n_symbols, variance_);
}

PowerAllocation::PowerAllocation(double p_source, std::vector<double> p_relay,
                                 double n0)
    : p_source_(p_source), p_relay_(std::move(p_relay)), n0_(n0) {
  auto positive = [](double x) { return x > 0.0 && std::isfinite(x); };
  if (!positive(p_source_)) throw std::invalid_argument("p_source: must be positive");
  if (!positive(n0_)) throw std::invalid_argument("n0: must be positive");
  for (double p : p_relay_)
    if (!positive(p)) throw std::invalid_argument("p_relay: must be positive");
}

PowerAllocation PowerAllocation::equal_split(double p_total, int n_relays,
                                             int n_symbols, double n0) {
  if (!(p_total > 0.0)) throw std::invalid_argument("p_total: must be positive");
  if (n_symbols < 1) throw std::invalid_argument("n_symbols: must be >= 1");
  const double p = p_total / (n_relays + n_symbols);
  return PowerAllocation(p, std::vector<double>(n_relays, p), n0);
}

PowerAllocation PowerAllocation::from_system_snr_db(double snr_db, int n_relays,
                                                    int n_symbols, double n0) {
  const double p = n0 * std::pow(10.0, snr_db / 10.0);
  return equal_split(p * (n_relays + n_symbols), n_relays, n_symbols, n0);
}

double PowerAllocation::power_of(Node u) const {
  switch (u.kind) {
    case Node::Kind::kSource: return p_source_;
    case Node::Kind::kRelay:
      if (u.index < 1 || u.index > n_relays())
        throw std::invalid_argument("power: relay index out of range");
      return p_relay_[u.index - 1];
    case Node::Kind::kDestination:
      throw std::invalid_argument("power: destination does not transmit");
  }
  throw std::invalid_argument("power: unknown node kind");
}

int slot_count(Scheme scheme, int m, int k) {
  if (m < 1) throw std::invalid_argument("m: must be >= 1");
  if (k < 0) throw std::invalid_argument("k: must be >= 0");
  return scheme == Scheme::kTdmaOh ? m + m * k : m + k;
}

double outage_threshold(Scheme scheme, int m, int k, double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("rate: must be positive");
  return std::exp2(slot_count(scheme, m, k) * rate) - 1.0;
}

double mean_link_snr(const NetworkTopology& topo, const PowerAllocation& power,
                     Node u, Node v) {
  const int l = topo.links().index_of(u, v);
  return power.power_of(u) * topo.variance(l) / power.n0();
}

std::vector<double> mean_link_snrs(const NetworkTopology& topo,
                                   const PowerAllocation& power) {
  const LinkSet& links = topo.links();
  const int k = links.n_relays();
  std::vector<double> mean(links.n_links());
  for (int r = 1; r <= k; ++r)
    mean[links.source_to_relay(r)] = power.p_source() * topo.variance(links.source_to_relay(r));
  mean[links.source_to_destination()] =
      power.p_source() * topo.variance(links.source_to_destination());
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j)
      mean[links.relay_to_relay(i, j)] =
          power.p_relay(i) * topo.variance(links.relay_to_relay(i, j));
    mean[links.relay_to_destination(i)] =
        power.p_relay(i) * topo.variance(links.relay_to_destination(i));
  }
  for (double& g : mean) g /= power.n0();
  return mean;
}

NetworkTopology random_topology(int n_relays, int n_symbols, double lo, double hi,
                                std::uint64_t seed) {
  if (!(lo > 0.0) || !(lo <= hi))
    throw std::invalid_argument("variance_range: need 0 < lo <= hi");
  LinkSet links(n_relays);
  RandomStream stream(seed);
  std::vector<double> variance(links.n_links());
  for (double& v : variance) v = lo + (hi - lo) * stream.next_uniform();
  return NetworkTopology(n_relays, n_symbols, std::move(variance));
}

std::string to_json(const Scenario& scenario) {
  nlohmann::json j;
  const NetworkTopology& topo = scenario.topology;
  j["K"] = topo.n_relays();
  j["M"] = topo.n_symbols();
  nlohmann::json vars = nlohmann::json::object();
  for (int l = 0; l < topo.links().n_links(); ++l)
    vars[topo.links().label(l)] = topo.variance(l);
  j["variances"] = vars;
  j["P_tot"] = scenario.p_total;
  j["N0"] = scenario.noise_power;
  j["R"] = scenario.rate;
  return j.dump(2);
}

Scenario scenario_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  for (const char* key : {"K", "M", "variances", "P_tot", "N0", "R"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string(key) + ": missing from scenario");
  std::map<std::string, double> variances;
  for (const auto& [key, value] : j.at("variances").items())
    variances[key] = value.get<double>();
  NetworkTopology topo = NetworkTopology::from_variance_map(
      j.at("K").get<int>(), j.at("M").get<int>(), variances);
  Scenario s{std::move(topo), j.at("P_tot").get<double>(), j.at("N0").get<double>(),
             j.at("R").get<double>()};
  if (!(s.noise_power > 0.0)) throw std::invalid_argument("N0: must be positive");
  if (!(s.p_total > 0.0)) throw std::invalid_argument("P_tot: must be positive");
  if (!(s.rate > 0.0)) throw std::invalid_argument("R: must be positive");
  return s;
}

}  // namespace stnc
