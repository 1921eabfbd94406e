#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "stnc/model.hpp"

namespace stnc::cli {

enum class ExperimentKind {
  kOutageSweep,
  kCapacitySweep,
  kValidateLemma1,
  kCompareSchemes,
};

const char* kind_name(ExperimentKind kind);

// Fully resolved experiment description. m_grid has one entry except for
// capacity sweeps; snr_db has one entry for capacity sweeps.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kOutageSweep;
  int n_relays = 2;
  std::vector<int> m_grid = {2};
  double rate = 1.0;
  std::vector<double> snr_db = {5, 10, 15, 20, 25, 30, 35};
  std::vector<Scheme> schemes;  // resolved by build_config; never empty
  std::uint64_t n_trials = 1000000;
  std::uint64_t seed = 1;
  double n0 = 1.0;
  std::optional<std::map<std::string, double>> variances;  // else random below
  double variance_lo = 0.1;
  double variance_hi = 25.0;
  int n_channels = 100;          // validate-lemma1 only
  std::uint64_t n_noise = 10000;  // validate-lemma1 only
  int n_workers = 0;             // 0 = hardware concurrency
  std::string out_path = "results.csv";
};

// Raw command-line / config-file values before merging; empty or negative
// fields mean "not given".
struct Options {
  std::string config_path;
  long long relays = -1;
  std::string symbols;  // "M" or "LO:HI[:STEP]"
  double rate = 0.0;
  std::string snr_db;  // "X" or "LO:HI:STEP"
  long long trials = -1;
  long long seed = -1;
  std::vector<std::string> schemes;
  std::string variance_range;  // "LO,HI"
  std::string out;
  long long workers = -1;
  long long channels = -1;
  long long noise_traces = -1;
};

// "LO:HI:STEP" (inclusive) or a single value.
std::vector<double> parse_grid(const std::string& text);
std::vector<int> parse_int_grid(const std::string& text);  // default step 1

// Defaults for the experiment kind, overlaid with the config file (if any),
// overlaid with explicit flags. Throws std::invalid_argument naming the
// offending field.
ExperimentConfig build_config(ExperimentKind kind, const Options& options);

void validate(const ExperimentConfig& config);

// Topology used by the run: the explicit variance table when given, otherwise
// variances drawn uniformly from [variance_lo, variance_hi] with the run seed.
NetworkTopology resolve_topology(const ExperimentConfig& config);

// Executes the experiment: writes the result file to out_path plus a JSON run
// manifest to out_path + ".manifest.json". Returns the process exit status.
int run(const ExperimentConfig& config, std::ostream& log);

}  // namespace stnc::cli
