#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "mandelstam/kinematics.hpp"

namespace mandelstam::cli {

// exit codes shared by the binary and the in-process entry point
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNoConvergence = 3;

struct CliOptions {
  std::string command;     // build | iterate | check | report
  std::string config_path;
  std::string out_dir = ".";
  bool resume = false;
  double tol = 0.0; // > 0 overrides the config tolerance
  int threads = 0;  // > 0 overrides MANDELSTAM_FORGE_THREADS / hardware
};

// amplitude recipe -> model; throws std::invalid_argument on a bad recipe
struct BuiltAmplitude {
  std::shared_ptr<AmplitudeModel> model;
  std::string tag; // fixed-pole | double-pole | rising | mandelstam | ...
  nlohmann::json params;
};
BuiltAmplitude make_amplitude(const nlohmann::json& recipe,
                              const std::string& out_dir);

// individual commands; config is the parsed JSON
int cmd_build(const nlohmann::json& config, const CliOptions& opts);
int cmd_iterate(const nlohmann::json& config, const CliOptions& opts);
int cmd_check(const nlohmann::json& config, const CliOptions& opts);
int cmd_report(const nlohmann::json& config, const CliOptions& opts);

// full dispatch: loads the config, applies thread/tol overrides, maps
// config-level exceptions to kExitConfigError
int run_forge(const CliOptions& opts);

} // namespace mandelstam::cli
