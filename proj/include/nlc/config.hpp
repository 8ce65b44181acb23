#pragma once

#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nlc/dynamics.hpp"

namespace nlc {

/// Invalid configuration; the message starts with the offending key.
class ConfigError : public std::invalid_argument {
public:
  ConfigError(const std::string& key, const std::string& what)
      : std::invalid_argument(key + ": " + what), key_(key) {}
  const std::string& key() const { return key_; }

private:
  std::string key_;
};

/// Run configuration. Every key is optional in the JSON text; missing keys
/// take the values below.
struct Config {
  int dim = 2;
  int n = 64;
  double length = 2.0 * std::numbers::pi;
  double nu = 0.1;
  double lambda = 1.0;
  double gamma = 1.0;
  double epsilon = 0.1;
  double alpha = 0.0;
  double dt = 1e-3;
  double t_end = 1.0;
  int save_every = 10;      ///< steps between diagnostics rows
  int snapshot_every = 0;   ///< steps between snapshots, 0 = never
  Model model = Model::lc;
  std::string init = "taylor-green-uniform-d";  ///< or vortex-pair, random-seeded, file:<path>
  std::uint64_t seed = 0;
  std::string output_dir = "nlc_output";
  Integrator integrator = Integrator::imex1;
  bool dealias = true;

  SimParams params() const;
  Grid grid() const;
  /// Number of steps to reach t_end.
  long total_steps() const;
  /// Throws ConfigError naming the first offending key.
  void validate() const;
};

/// Parses a JSON object. Unknown keys, type mismatches and constraint
/// violations throw ConfigError naming the key.
Config parse_config(std::string_view text);
Config load_config(const std::string& path);
/// JSON with every key present, keys sorted, two-space indentation.
std::string serialize_config(const Config& c);

Model parse_model(std::string_view s);
Integrator parse_integrator(std::string_view s);

}  // namespace nlc
