// Runs the built command-line tool and captures its standard output.
#ifndef FQINC_TESTS_CLI_RUNNER_HPP_
#define FQINC_TESTS_CLI_RUNNER_HPP_

#include <sys/wait.h>

#include <cstdio>
#include <string>

namespace cli {

struct Result {
  int exit_code = -1;
  std::string out;
};

inline Result run(const std::string& args) {
  const std::string cmd = std::string(FQINC_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace cli

#endif  // FQINC_TESTS_CLI_RUNNER_HPP_
