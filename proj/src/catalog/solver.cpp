#include "mmwb/catalog/solver.hpp"

#include "mmwb/ring.hpp"

#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <thread>

namespace mmwb::cat {

namespace {

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

void replace_all(std::string& s, const std::string& from, const std::string& to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
    s.replace(pos, from.size(), to);
}

}  // namespace

std::string expand_template(const std::string& command_template, const std::filesystem::path& cnf,
                            const std::filesystem::path& model) {
  if (command_template.find("{cnf}") == std::string::npos) {
    throw FormatError("solver command template lacks the {cnf} placeholder");
  }
  std::string cmd = command_template;
  replace_all(cmd, "{cnf}", shell_quote(cnf.string()));
  replace_all(cmd, "{model}", shell_quote(model.string()));
  return cmd;
}

SolverRun run_solver(const std::string& command_template, const std::filesystem::path& cnf,
                     const std::filesystem::path& model, double timeout_seconds) {
  SolverRun run;
  run.command = expand_template(command_template, cnf, model);
  const pid_t pid = ::fork();
  if (pid < 0) throw std::runtime_error("fork failed");
  if (pid == 0) {
    ::setpgid(0, 0);
    ::execl("/bin/sh", "sh", "-c", run.command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::setpgid(pid, pid);
  const auto start = std::chrono::steady_clock::now();
  int status = 0;
  while (true) {
    const pid_t r = ::waitpid(pid, &status, WNOHANG);
    if (r == pid) break;
    if (timeout_seconds > 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > timeout_seconds) {
      ::kill(-pid, SIGKILL);
      ::waitpid(pid, &status, 0);
      run.timed_out = true;
      return run;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  run.exit_status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

}  // namespace mmwb::cat
