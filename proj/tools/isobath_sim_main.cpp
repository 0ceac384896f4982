// Command-line front end for the isobath mission simulator.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "isobath/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Receding-horizon isobath localization simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string seed_str;
  std::string out_dir;
  std::string mode_str;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("config", config_path, "mission config file")->required();
    cmd->add_option("--seed", seed_str, "override planner seed (sensor seed becomes seed+1)");
    cmd->add_option("--out-dir", out_dir, "override output directory");
  };

  CLI::App* run = app.add_subcommand("run", "execute the configured mission arm(s)");
  add_common(run);
  run->add_option("--mode", mode_str, "terminal-rewards, baseline, or both");

  CLI::App* validate = app.add_subcommand("validate", "check a config and exit");
  validate->add_option("config", config_path, "mission config file")->required();

  CLI::App* prior = app.add_subcommand("dump-prior", "write the prior-mean grid");
  add_common(prior);

  CLI11_PARSE(app, argc, argv);

  isobath::CliOverrides overrides;
  if (!seed_str.empty()) overrides.seed = std::stoull(seed_str);
  if (!out_dir.empty()) overrides.out_dir = out_dir;
  if (!mode_str.empty()) {
    if (mode_str == "terminal-rewards") {
      overrides.mode = isobath::MissionMode::kTerminalRewards;
    } else if (mode_str == "baseline") {
      overrides.mode = isobath::MissionMode::kBaseline;
    } else if (mode_str == "both") {
      overrides.mode = isobath::MissionMode::kBoth;
    } else {
      std::cerr << "config error: unknown mode '" << mode_str << "'\n";
      return 1;
    }
  }

  if (run->parsed()) return isobath::run_mission(config_path, overrides);
  if (validate->parsed()) return isobath::validate_config(config_path);
  if (prior->parsed()) return isobath::dump_prior(config_path, overrides);
  return 1;
}
