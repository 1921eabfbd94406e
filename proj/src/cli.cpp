#include "stnc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "stnc/baseband.hpp"
#include "stnc/closedform.hpp"
#include "stnc/montecarlo.hpp"

namespace stnc::cli {

namespace {

constexpr const char* kCsvHeader =
    "scheme,K,M,R,snr_db,p_out_mc,ci_lo,ci_hi,p_out_theorem1,n_trials";

std::string format_row(const char* scheme, int k, int m, double rate, double snr_db,
                       const OutageEstimate& est, double theorem1,
                       std::uint64_t n_trials) {
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "%s,%d,%d,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%llu", scheme, k, m,
                rate, snr_db, est.p_hat, est.ci_lo, est.ci_hi, theorem1,
                static_cast<unsigned long long>(n_trials));
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("out: cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("out: write to '" + path + "' failed");
}

double parse_number(const std::string& text, const char* field) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(field) + ": cannot parse number '" +
                                text + "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

nlohmann::json manifest_json(const ExperimentConfig& cfg,
                             const NetworkTopology& topo) {
  nlohmann::json j;
  j["experiment"] = kind_name(cfg.kind);
  j["K"] = cfg.n_relays;
  j["M_grid"] = cfg.m_grid;
  j["R"] = cfg.rate;
  j["snr_db"] = cfg.snr_db;
  std::vector<std::string> names;
  for (Scheme s : cfg.schemes) names.emplace_back(scheme_name(s));
  j["schemes"] = names;
  j["trials"] = cfg.n_trials;
  j["seed"] = cfg.seed;
  j["N0"] = cfg.n0;
  nlohmann::json vars = nlohmann::json::object();
  for (int l = 0; l < topo.links().n_links(); ++l)
    vars[topo.links().label(l)] = topo.variance(l);
  j["variances"] = vars;
  if (!cfg.variances)
    j["variance_range"] = {cfg.variance_lo, cfg.variance_hi};
  if (cfg.kind == ExperimentKind::kValidateLemma1) {
    j["channels"] = cfg.n_channels;
    j["noise_traces"] = cfg.n_noise;
  }
  j["out"] = cfg.out_path;
  return j;
}

}  // namespace

const char* kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kOutageSweep: return "outage-sweep";
    case ExperimentKind::kCapacitySweep: return "capacity-sweep";
    case ExperimentKind::kValidateLemma1: return "validate-lemma1";
    case ExperimentKind::kCompareSchemes: return "compare-schemes";
  }
  throw std::invalid_argument("experiment: unknown kind");
}

std::vector<double> parse_grid(const std::string& text) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.size() == 1) return {parse_number(parts[0], "grid")};
  if (parts.size() != 3)
    throw std::invalid_argument("grid: expected 'VALUE' or 'LO:HI:STEP', got '" +
                                text + "'");
  const double lo = parse_number(parts[0], "grid");
  const double hi = parse_number(parts[1], "grid");
  const double step = parse_number(parts[2], "grid");
  if (!(step > 0.0)) throw std::invalid_argument("grid: step must be positive");
  if (hi < lo) throw std::invalid_argument("grid: need LO <= HI");
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double x = lo + i * step;
    if (x > hi + step * 1e-9) break;
    grid.push_back(x);
  }
  return grid;
}

std::vector<int> parse_int_grid(const std::string& text) {
  const std::vector<std::string> parts = split(text, ':');
  auto as_int = [](const std::string& s) {
    const double v = parse_number(s, "grid");
    const int i = static_cast<int>(std::lround(v));
    if (v != i) throw std::invalid_argument("grid: expected an integer, got '" + s + "'");
    return i;
  };
  if (parts.size() == 1) return {as_int(parts[0])};
  if (parts.size() != 2 && parts.size() != 3)
    throw std::invalid_argument("grid: expected 'M' or 'LO:HI[:STEP]', got '" +
                                text + "'");
  const int lo = as_int(parts[0]);
  const int hi = as_int(parts[1]);
  const int step = parts.size() == 3 ? as_int(parts[2]) : 1;
  if (step < 1) throw std::invalid_argument("grid: step must be >= 1");
  if (hi < lo) throw std::invalid_argument("grid: need LO <= HI");
  std::vector<int> grid;
  for (int x = lo; x <= hi; x += step) grid.push_back(x);
  return grid;
}

ExperimentConfig build_config(ExperimentKind kind, const Options& opt) {
  ExperimentConfig cfg;
  cfg.kind = kind;
  switch (kind) {
    case ExperimentKind::kOutageSweep:
    case ExperimentKind::kCompareSchemes:
      cfg.schemes = {Scheme::kStncOhaf, Scheme::kStncAf, Scheme::kTdmaOh};
      break;
    case ExperimentKind::kCapacitySweep:
      cfg.schemes = {Scheme::kStncOhaf, Scheme::kStncAf};
      cfg.m_grid = parse_int_grid("1:10");
      cfg.snr_db = {25.0};
      break;
    case ExperimentKind::kValidateLemma1:
      cfg.schemes = {Scheme::kStncOhaf};
      cfg.snr_db = {20.0};
      cfg.out_path = "gap.json";
      // The analytical/baseband comparison is about equal-strength links, not
      // a particular topology; default to unit variances.
      cfg.variances = std::map<std::string, double>{};
      break;
  }

  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in)
      throw std::invalid_argument("config: cannot open '" + opt.config_path + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw std::invalid_argument("config: invalid JSON: " + std::string(e.what()));
    }
    if (j.contains("K")) cfg.n_relays = j.at("K").get<int>();
    if (j.contains("M")) {
      if (j.at("M").is_string())
        cfg.m_grid = parse_int_grid(j.at("M").get<std::string>());
      else
        cfg.m_grid = {j.at("M").get<int>()};
    }
    if (j.contains("R")) cfg.rate = j.at("R").get<double>();
    if (j.contains("N0")) cfg.n0 = j.at("N0").get<double>();
    if (j.contains("snr_db")) {
      if (j.at("snr_db").is_string())
        cfg.snr_db = parse_grid(j.at("snr_db").get<std::string>());
      else if (j.at("snr_db").is_array())
        cfg.snr_db = j.at("snr_db").get<std::vector<double>>();
      else
        cfg.snr_db = {j.at("snr_db").get<double>()};
    } else if (j.contains("P_tot")) {
      // Scenario-style operating point: one grid entry at P/N0 with the
      // equal split across K+M transmissions.
      const double p_tot = j.at("P_tot").get<double>();
      if (!(p_tot > 0.0)) throw std::invalid_argument("P_tot: must be positive");
      const double p = p_tot / (cfg.n_relays + cfg.m_grid.front());
      cfg.snr_db = {10.0 * std::log10(p / cfg.n0)};
    }
    if (j.contains("trials")) cfg.n_trials = j.at("trials").get<std::uint64_t>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("schemes")) {
      cfg.schemes.clear();
      for (const auto& name : j.at("schemes"))
        cfg.schemes.push_back(scheme_from_name(name.get<std::string>()));
    }
    if (j.contains("variances")) {
      std::map<std::string, double> vars;
      for (const auto& [key, value] : j.at("variances").items())
        vars[key] = value.get<double>();
      cfg.variances = std::move(vars);
    }
    if (j.contains("variance_range")) {
      cfg.variance_lo = j.at("variance_range").at(0).get<double>();
      cfg.variance_hi = j.at("variance_range").at(1).get<double>();
      cfg.variances.reset();
    }
    if (j.contains("channels")) cfg.n_channels = j.at("channels").get<int>();
    if (j.contains("noise_traces"))
      cfg.n_noise = j.at("noise_traces").get<std::uint64_t>();
    if (j.contains("workers")) cfg.n_workers = j.at("workers").get<int>();
    if (j.contains("out")) cfg.out_path = j.at("out").get<std::string>();
  }

  if (opt.relays >= 0) cfg.n_relays = static_cast<int>(opt.relays);
  if (!opt.symbols.empty()) cfg.m_grid = parse_int_grid(opt.symbols);
  if (opt.rate > 0.0) cfg.rate = opt.rate;
  if (!opt.snr_db.empty()) cfg.snr_db = parse_grid(opt.snr_db);
  if (opt.trials >= 0) cfg.n_trials = static_cast<std::uint64_t>(opt.trials);
  if (opt.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opt.seed);
  if (!opt.schemes.empty()) {
    cfg.schemes.clear();
    for (const std::string& name : opt.schemes)
      cfg.schemes.push_back(scheme_from_name(name));
  }
  if (!opt.variance_range.empty()) {
    const std::vector<std::string> parts = split(opt.variance_range, ',');
    if (parts.size() != 2)
      throw std::invalid_argument("variance_range: expected 'LO,HI'");
    cfg.variance_lo = parse_number(parts[0], "variance_range");
    cfg.variance_hi = parse_number(parts[1], "variance_range");
    cfg.variances.reset();
  }
  if (!opt.out.empty()) cfg.out_path = opt.out;
  if (opt.workers >= 0) cfg.n_workers = static_cast<int>(opt.workers);
  if (opt.channels >= 0) cfg.n_channels = static_cast<int>(opt.channels);
  if (opt.noise_traces >= 0)
    cfg.n_noise = static_cast<std::uint64_t>(opt.noise_traces);

  if (kind == ExperimentKind::kCompareSchemes)
    cfg.schemes = {Scheme::kStncOhaf, Scheme::kStncAf, Scheme::kTdmaOh};
  if (cfg.kind == ExperimentKind::kValidateLemma1 && cfg.variances &&
      cfg.variances->empty()) {
    // Fill the unit-variance default now that K is final.
    std::map<std::string, double> vars;
    const LinkSet links(cfg.n_relays);
    for (int l = 0; l < links.n_links(); ++l) vars[links.label(l)] = 1.0;
    cfg.variances = std::move(vars);
  }
  validate(cfg);
  return cfg;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.n_relays < 0) throw std::invalid_argument("relays: must be >= 0");
  if (cfg.m_grid.empty()) throw std::invalid_argument("symbols: grid is empty");
  for (int m : cfg.m_grid)
    if (m < 1) throw std::invalid_argument("symbols: entries must be >= 1");
  for (std::size_t i = 1; i < cfg.m_grid.size(); ++i)
    if (cfg.m_grid[i] <= cfg.m_grid[i - 1])
      throw std::invalid_argument("symbols: grid must be strictly increasing");
  if (!(cfg.rate > 0.0)) throw std::invalid_argument("rate: must be positive");
  if (cfg.snr_db.empty()) throw std::invalid_argument("snr_db: grid is empty");
  for (std::size_t i = 1; i < cfg.snr_db.size(); ++i)
    if (!(cfg.snr_db[i] > cfg.snr_db[i - 1]))
      throw std::invalid_argument("snr_db: grid must be strictly increasing");
  if (cfg.n_trials < 1) throw std::invalid_argument("trials: must be >= 1");
  if (!(cfg.n0 > 0.0)) throw std::invalid_argument("N0: must be positive");
  if (cfg.schemes.empty()) throw std::invalid_argument("schemes: none selected");
  if (!cfg.variances && (!(cfg.variance_lo > 0.0) || cfg.variance_hi < cfg.variance_lo))
    throw std::invalid_argument("variance_range: need 0 < lo <= hi");
  if (cfg.out_path.empty()) throw std::invalid_argument("out: path is empty");
  if (cfg.kind == ExperimentKind::kCapacitySweep && cfg.snr_db.size() != 1)
    throw std::invalid_argument("snr_db: capacity-sweep needs a single value");
  if (cfg.kind != ExperimentKind::kCapacitySweep && cfg.m_grid.size() != 1)
    throw std::invalid_argument("symbols: only capacity-sweep accepts a grid");
  if (cfg.kind == ExperimentKind::kValidateLemma1) {
    if (cfg.n_channels < 10) throw std::invalid_argument("channels: must be >= 10");
    if (cfg.n_noise < 1000)
      throw std::invalid_argument("noise_traces: must be >= 1000");
    if (cfg.n_relays < 1) throw std::invalid_argument("relays: must be >= 1 here");
  }
}

NetworkTopology resolve_topology(const ExperimentConfig& cfg) {
  const int m0 = cfg.m_grid.front();
  if (cfg.variances)
    return NetworkTopology::from_variance_map(cfg.n_relays, m0, *cfg.variances);
  return random_topology(cfg.n_relays, m0, cfg.variance_lo, cfg.variance_hi,
                         cfg.seed);
}

int run(const ExperimentConfig& cfg, std::ostream& log) {
  validate(cfg);
  const NetworkTopology topo = resolve_topology(cfg);
  write_file(cfg.out_path + ".manifest.json", manifest_json(cfg, topo).dump(2) + "\n");

  std::string body;
  if (cfg.kind == ExperimentKind::kOutageSweep ||
      cfg.kind == ExperimentKind::kCompareSchemes) {
    body = std::string(kCsvHeader) + "\n";
    for (Scheme scheme : cfg.schemes) {
      const auto points = sweep_snr(topo, scheme, cfg.rate, cfg.snr_db,
                                    cfg.n_trials, cfg.seed, cfg.n_workers);
      for (const SnrSweepPoint& p : points)
        body += format_row(scheme_name(scheme), cfg.n_relays, topo.n_symbols(),
                           cfg.rate, p.snr_db, p.estimate, p.theorem1,
                           cfg.n_trials) +
                "\n";
    }
  } else if (cfg.kind == ExperimentKind::kCapacitySweep) {
    body = std::string(kCsvHeader) + ",c_soc\n";
    const double snr_db = cfg.snr_db.front();
    for (Scheme scheme : cfg.schemes) {
      const auto points = sweep_m(topo, scheme, cfg.rate, cfg.m_grid, snr_db,
                                  cfg.n_trials, cfg.seed, cfg.n_workers);
      for (const CapacityPoint& p : points) {
        double theorem1 = std::numeric_limits<double>::quiet_NaN();
        if (scheme == Scheme::kStncOhaf && cfg.n_relays >= 1) {
          const PowerAllocation power = PowerAllocation::from_system_snr_db(
              snr_db, cfg.n_relays, p.n_symbols, cfg.n0);
          theorem1 =
              theorem1_outage(topo.with_symbols(p.n_symbols), power, cfg.rate);
        }
        char extra[40];
        std::snprintf(extra, sizeof extra, ",%.12g", p.c_soc);
        body += format_row(scheme_name(scheme), cfg.n_relays, p.n_symbols,
                           cfg.rate, snr_db, p.estimate, theorem1, cfg.n_trials) +
                extra + "\n";
      }
    }
  } else {  // validate-lemma1
    nlohmann::json reports = nlohmann::json::array();
    for (double snr_db : cfg.snr_db) {
      const PowerAllocation power = PowerAllocation::from_system_snr_db(
          snr_db, cfg.n_relays, topo.n_symbols(), cfg.n0);
      const GapStatistics gap = lemma1_gap_report(
          topo, power, topo.n_symbols(), cfg.n_channels, cfg.n_noise, cfg.seed);
      reports.push_back(nlohmann::json::parse(to_json(gap)));
    }
    body = reports.dump(2) + "\n";
  }

  write_file(cfg.out_path, body);
  log << kind_name(cfg.kind) << ": wrote " << cfg.out_path << "\n";
  return 0;
}

}  // namespace stnc::cli
