#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <string>

namespace hyperops::test {

struct CliRun {
  int code = -1;
  std::string out;
};

/// Runs the command-line tool through the shell; stderr is discarded.
inline CliRun run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" HYPEROPS_CLI_PATH "' " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace hyperops::test
