#pragma once

#include "ccsub/engine.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ccsub::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  ///< verification mismatch, insufficient period evidence
  kUsage = 2,    ///< bad arguments, bad ruleset, hypothesis violated
  kResource = 3, ///< state ceiling exceeded
};

enum class Format { Pretty, Csv, Json };

struct CliConfig {
  std::string ruleset_spec;
  std::optional<Count> n;
  std::optional<Count> n_max;
  Side side = Side::Base;
  Format format = Format::Pretty;
  std::optional<std::string> output_path;
  Count state_ceiling = EngineLimits{}.state_ceiling;
  Count min_tail_multiple = 3;
  bool allow_small_b = false;
  bool verbose = false;
  bool engine_first = false;
};

/// Runs one invocation; args exclude the program name. Never throws.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

int cmd_grundy(const CliConfig &config, std::ostream &out);
int cmd_table(const CliConfig &config, std::ostream &out);
int cmd_verify(const CliConfig &config, std::ostream &out);
int cmd_period(const CliConfig &config, std::ostream &out, std::ostream &err);
int cmd_play(const CliConfig &config, std::istream &in, std::ostream &out);

} // namespace ccsub::cli
