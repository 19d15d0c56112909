#pragma once

// Runs the CLI against tests/golden/manifest.txt and compares captured
// stdout byte-for-byte, plus exit codes. Regenerate with
// GOLDEN_REGEN=1 after intentional output changes. The working
// directory must be the repository root and FREEMOD_CLI must point at
// the built binary (ctest sets both).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace freemod::golden {

struct Case {
  std::string name;
  int expected_exit = 0;
  std::string args;
};

struct Outcome {
  std::string name;
  bool ok = false;
  std::string message;
};

inline std::vector<Case> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read golden manifest " + path);
  std::vector<Case> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream parts(line);
    Case c;
    parts >> c.name >> c.expected_exit;
    std::getline(parts, c.args);
    if (!c.args.empty() && c.args[0] == ' ') c.args.erase(0, 1);
    cases.push_back(std::move(c));
  }
  return cases;
}

struct RunResult {
  std::string output;
  int exit_code = -1;
};

inline RunResult run_cli(const std::string& args) {
  const char* cli = std::getenv("FREEMOD_CLI");
  if (!cli) throw std::runtime_error("FREEMOD_CLI is not set");
  const std::string command = std::string(cli) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  RunResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Runs every manifest case. In regen mode rewrites the expected files
// and reports everything as passing.
inline std::vector<Outcome> run_all(const std::string& dir = "tests/golden") {
  const bool regen = std::getenv("GOLDEN_REGEN") != nullptr;
  std::vector<Outcome> outcomes;
  for (const auto& c : load_manifest(dir + "/manifest.txt")) {
    Outcome o;
    o.name = c.name;
    const RunResult r = run_cli(c.args);
    const std::string expected_path = dir + "/" + c.name + ".out";
    if (regen) {
      std::ofstream out(expected_path, std::ios::binary);
      out << r.output;
      o.ok = r.exit_code == c.expected_exit;
      o.message = o.ok ? "regenerated"
                       : "exit " + std::to_string(r.exit_code) + ", manifest says " +
                             std::to_string(c.expected_exit);
      outcomes.push_back(std::move(o));
      continue;
    }
    const std::string expected = read_all(expected_path);
    if (r.exit_code != c.expected_exit) {
      o.message = "exit " + std::to_string(r.exit_code) + ", expected " +
                  std::to_string(c.expected_exit);
    } else if (r.output != expected) {
      o.message = "output differs from " + expected_path;
    } else {
      o.ok = true;
    }
    outcomes.push_back(std::move(o));
  }
  return outcomes;
}

}  // namespace freemod::golden
