#pragma once

#include <filesystem>
#include <string>

namespace mmwb::cat {

struct SolverRun {
  int exit_status = -1;  // -1 when killed or not started
  bool timed_out = false;
  std::string command;
};

/// Replaces {cnf} and {model} (shell-quoted) in the template and runs it via
/// /bin/sh, killing the process group after `timeout_seconds` (≤ 0: none).
SolverRun run_solver(const std::string& command_template, const std::filesystem::path& cnf,
                     const std::filesystem::path& model, double timeout_seconds);

std::string expand_template(const std::string& command_template, const std::filesystem::path& cnf,
                            const std::filesystem::path& model);

}  // namespace mmwb::cat
