#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace proc {

struct Result {
  int status = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

// Runs `electra <args>` with stdout and stderr captured in `scratch`,
// from `cwd` when given.
inline Result run_cli(const std::string& args, const std::filesystem::path& scratch,
                      const std::filesystem::path& cwd = {}) {
  std::filesystem::create_directories(scratch);
  const auto out = std::filesystem::absolute(scratch / "stdout.txt");
  const auto err = std::filesystem::absolute(scratch / "stderr.txt");
  const std::string prefix = cwd.empty() ? "" : "cd " + quote(cwd.string()) + " && ";
  const std::string command = prefix +
      quote(ELECTRA_CLI_PATH) + " " + args + " >" + quote(out.string()) + " 2>" + quote(err.string());
  const int raw = std::system(command.c_str());
  Result r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace proc
