#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <stdexcept>
#include <string>

// Runs the CLI binary through the shell and captures stdout + exit code.
struct CliResult {
  int exit_code = -1;
  std::string out;
};

inline CliResult run_cli_at(const std::string& binary, const std::string& args) {
  const std::string cmd = binary + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = std::move(out);
  return r;
}
