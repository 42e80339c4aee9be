#pragma once

// The dyckmax command line: argument parsing, validation and dispatch.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dyck::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfig = 2;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::vector<std::int64_t> n;
  std::int64_t n_max = 0;
  std::int64_t cardinality_max = 500;
  std::vector<double> lambda;
  std::vector<double> x;
  std::uint64_t seed = 42;
  std::int64_t n_samples = 100000;
  std::int64_t count = 10;
  double tol = 1e-8;
  double level = 0.99;
  double epsilon = 0.1;
  unsigned threads = 1;
  std::string mode = "exact";  // exact | log
  std::string kind = "dyck";   // dyck | bridge, for `sample`
  std::string output;          // empty: standard output
  std::string format = "csv";  // csv | json

  // Throws ConfigError naming the offending flag.
  void validate() const;
  nlohmann::json to_json() const;
  static RunConfig from_json(const nlohmann::json& j);
};

// Parses argv-style arguments (without the program name), fills defaults and
// validates. Throws ConfigError; `--help` throws HelpRequested.
struct HelpRequested {
  std::string text;
};
RunConfig parse_args(const std::vector<std::string>& args);

// Runs a validated configuration. Data goes to `out` unless an output path
// is set (relative paths resolve against $DYCKMAX_OUT_DIR when set);
// summaries and failures go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_args + run with exit-code mapping.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dyck::cli
