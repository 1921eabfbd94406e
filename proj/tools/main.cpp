#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "stnc/cli.hpp"

namespace {

void add_common_options(CLI::App* sub, stnc::cli::Options* opt) {
  sub->add_option("--config", opt->config_path, "JSON config file; flags override");
  sub->add_option("--relays", opt->relays, "number of relays K");
  sub->add_option("--symbols", opt->symbols,
                  "symbols per period M (capacity-sweep accepts LO:HI[:STEP])");
  sub->add_option("--rate", opt->rate, "target spectral rate R (bits/s/Hz)");
  sub->add_option("--snr-db", opt->snr_db, "system SNR grid, LO:HI:STEP or a value");
  sub->add_option("--trials", opt->trials, "Monte Carlo trials per point");
  sub->add_option("--seed", opt->seed, "experiment seed");
  sub->add_option("--scheme", opt->schemes,
                  "scheme name, repeatable (STNC-OHAF, STNC-AF, TDMA-OH)")
      ->check(CLI::IsMember({"STNC-OHAF", "STNC-AF", "TDMA-OH"}));
  sub->add_option("--variance-range", opt->variance_range,
                  "LO,HI for seeded random link variances");
  sub->add_option("--out", opt->out, "output file path");
  sub->add_option("--workers", opt->workers, "worker threads (0 = hardware)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cooperative-relaying outage and capacity simulator"};
  app.require_subcommand(1);

  stnc::cli::Options opt;

  CLI::App* outage = app.add_subcommand(
      "outage-sweep", "Outage probability versus system SNR, with the closed form");
  add_common_options(outage, &opt);

  CLI::App* capacity = app.add_subcommand(
      "capacity-sweep", "Sum outage capacity versus symbol count M");
  add_common_options(capacity, &opt);

  CLI::App* lemma = app.add_subcommand(
      "validate-lemma1",
      "Gap between the analytical end-to-end SNR and the signal-chain SINR");
  add_common_options(lemma, &opt);
  lemma->add_option("--channels", opt.channels, "channel draws per report");
  lemma->add_option("--noise-traces", opt.noise_traces, "noise traces per channel");

  CLI::App* compare = app.add_subcommand(
      "compare-schemes", "Outage sweep across all three schemes on one topology");
  add_common_options(compare, &opt);

  CLI11_PARSE(app, argc, argv);

  stnc::cli::ExperimentKind kind = stnc::cli::ExperimentKind::kOutageSweep;
  if (capacity->parsed()) kind = stnc::cli::ExperimentKind::kCapacitySweep;
  if (lemma->parsed()) kind = stnc::cli::ExperimentKind::kValidateLemma1;
  if (compare->parsed()) kind = stnc::cli::ExperimentKind::kCompareSchemes;

  try {
    const stnc::cli::ExperimentConfig cfg = stnc::cli::build_config(kind, opt);
    return stnc::cli::run(cfg, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
