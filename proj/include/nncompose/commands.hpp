#pragma once

// Subcommand bodies shared by the command-line tool and the Python module.
// Each returns a JSON summary; `ok` is false when the command ran but the
// outcome is a failure (failed certifications, safety violations).

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "nncompose/pipeline.hpp"

namespace nncompose {

/// Bad user input that is not part of the config file.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommandResult {
  nlohmann::json summary;
  bool ok = true;
};

struct RunArgs {
  std::string task;
  std::string x0;
  std::size_t sample = 0;
  std::string mode = "truth";
  std::string svg;
  bool no_transfer = false;
  std::uint64_t seed = 0;
};

/// Loads a task file; the name defaults to the file stem.
Task load_task(const std::filesystem::path& path, const Abstraction& abs);
State parse_state(const std::string& s, std::size_t n);

CommandResult cmd_abstract(const RunConfig& cfg, bool force);
CommandResult cmd_train(const RunConfig& cfg, const std::string& task_file, bool all);
CommandResult cmd_select(const RunConfig& cfg, const std::string& task_file, const std::string& out_path);
CommandResult cmd_run(const RunConfig& cfg, const RunArgs& args);
CommandResult cmd_bound(const RunConfig& cfg, const std::string& task_file, std::size_t subdivisions, bool oracle);

}  // namespace nncompose
