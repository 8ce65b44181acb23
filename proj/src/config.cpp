#include "nlc/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace nlc {

using nlohmann::json;

namespace {

const std::set<std::string> known_keys = {
    "alpha", "dealias", "dim",  "dt",   "epsilon",    "gamma",   "init",      "integrator",     "lambda",
    "length", "model",  "n",    "nu",   "output_dir", "save_every", "seed", "snapshot_every", "t_end"};

double get_real(const json& j, const std::string& key) {
  if (!j.is_number()) throw ConfigError(key, "expected a number");
  return j.get<double>();
}

long long get_integer(const json& j, const std::string& key) {
  if (!j.is_number_integer()) throw ConfigError(key, "expected an integer");
  return j.get<long long>();
}

std::string get_string(const json& j, const std::string& key) {
  if (!j.is_string()) throw ConfigError(key, "expected a string");
  return j.get<std::string>();
}

}  // namespace

Model parse_model(std::string_view s) {
  if (s == "lc") return Model::lc;
  if (s == "lc-alpha") return Model::lc_alpha;
  throw ConfigError("model", "expected \"lc\" or \"lc-alpha\"");
}

Integrator parse_integrator(std::string_view s) {
  if (s == "imex1") return Integrator::imex1;
  if (s == "imex2") return Integrator::imex2;
  throw ConfigError("integrator", "expected \"imex1\" or \"imex2\"");
}

SimParams Config::params() const {
  SimParams p;
  p.nu = nu;
  p.lambda = lambda;
  p.gamma = gamma;
  p.epsilon = epsilon;
  p.alpha = alpha;
  p.dt = dt;
  p.model = model;
  p.dealias = dealias;
  p.integrator = integrator;
  return p;
}

Grid Config::grid() const { return make_grid(dim, n, length); }

long Config::total_steps() const { return std::lround(t_end / dt); }

void Config::validate() const {
  if (dim != 2 && dim != 3) throw ConfigError("dim", "must be 2 or 3");
  if (n < 8) throw ConfigError("n", "must be at least 8");
  if (n % 2 != 0) throw ConfigError("n", "must be even");
  if (!(std::isfinite(length) && length > 0.0)) throw ConfigError("length", "must be positive");
  if (!(std::isfinite(t_end) && t_end >= 0.0)) throw ConfigError("t_end", "must be non-negative");
  if (save_every < 1) throw ConfigError("save_every", "must be at least 1");
  if (snapshot_every < 0) throw ConfigError("snapshot_every", "must be non-negative");
  if (init.empty()) throw ConfigError("init", "must not be empty");
  if (init != "taylor-green-uniform-d" && init != "vortex-pair" && init != "random-seeded" &&
      init.rfind("file:", 0) != 0)
    throw ConfigError("init", "unknown initial condition '" + init + "'");
  if (init == "file:") throw ConfigError("init", "missing path after file:");
  if (output_dir.empty()) throw ConfigError("output_dir", "must not be empty");
  try {
    params().validate();
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    const auto colon = msg.find(':');
    throw ConfigError(msg.substr(0, colon), colon == std::string::npos ? msg : msg.substr(colon + 2));
  }
}

Config parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config", "expected a JSON object");

  Config c;
  for (const auto& [key, value] : j.items()) {
    if (!known_keys.count(key)) throw ConfigError(key, "unknown key");
    if (key == "dim") c.dim = static_cast<int>(get_integer(value, key));
    else if (key == "n") c.n = static_cast<int>(get_integer(value, key));
    else if (key == "length") c.length = get_real(value, key);
    else if (key == "nu") c.nu = get_real(value, key);
    else if (key == "lambda") c.lambda = get_real(value, key);
    else if (key == "gamma") c.gamma = get_real(value, key);
    else if (key == "epsilon") c.epsilon = get_real(value, key);
    else if (key == "alpha") c.alpha = get_real(value, key);
    else if (key == "dt") c.dt = get_real(value, key);
    else if (key == "t_end") c.t_end = get_real(value, key);
    else if (key == "save_every") c.save_every = static_cast<int>(get_integer(value, key));
    else if (key == "snapshot_every") c.snapshot_every = static_cast<int>(get_integer(value, key));
    else if (key == "model") c.model = parse_model(get_string(value, key));
    else if (key == "init") c.init = get_string(value, key);
    else if (key == "seed") {
      if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0))
        throw ConfigError(key, "expected a non-negative integer");
      c.seed = value.get<std::uint64_t>();
    } else if (key == "output_dir") c.output_dir = get_string(value, key);
    else if (key == "integrator") c.integrator = parse_integrator(get_string(value, key));
    else if (key == "dealias") {
      if (!value.is_boolean()) throw ConfigError(key, "expected a boolean");
      c.dealias = value.get<bool>();
    }
  }
  c.validate();
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const Config& c) {
  json j;
  j["dim"] = c.dim;
  j["n"] = c.n;
  j["length"] = c.length;
  j["nu"] = c.nu;
  j["lambda"] = c.lambda;
  j["gamma"] = c.gamma;
  j["epsilon"] = c.epsilon;
  j["alpha"] = c.alpha;
  j["dt"] = c.dt;
  j["t_end"] = c.t_end;
  j["save_every"] = c.save_every;
  j["snapshot_every"] = c.snapshot_every;
  j["model"] = to_string(c.model);
  j["init"] = c.init;
  j["seed"] = c.seed;
  j["output_dir"] = c.output_dir;
  j["integrator"] = to_string(c.integrator);
  j["dealias"] = c.dealias;
  return j.dump(2) + "\n";
}

}  // namespace nlc
