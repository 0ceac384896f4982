#ifndef ISOBATH_CLI_HPP
#define ISOBATH_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "isobath/config.hpp"

namespace isobath {

struct CliOverrides {
  std::optional<std::uint64_t> seed;     ///< sets planner seed; sensor seed becomes seed + 1
  std::optional<std::string> out_dir;
  std::optional<MissionMode> mode;
};

/// Executes the configured arm(s); writes mission log, measurement and
/// retained-sample CSVs, posterior grids and a summary per arm under the
/// output directory. Returns 0 on success, 1 on configuration errors,
/// 2 on runtime faults.
int run_mission(const std::string& config_path, const CliOverrides& overrides = {});

/// Parses and validates the config; reports problems. 0 = valid, 1 = not.
int validate_config(const std::string& config_path);

/// Writes the prior-mean grid (no data) for the config. Same exit codes.
int dump_prior(const std::string& config_path, const CliOverrides& overrides = {});

}  // namespace isobath

#endif  // ISOBATH_CLI_HPP
