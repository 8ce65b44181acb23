#include "nlc/run.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "nlc/csv.hpp"
#include "nlc/initial.hpp"
#include "nlc/operators.hpp"
#include "nlc/snapshot.hpp"
#include "nlc/transform.hpp"

namespace nlc {

namespace fs = std::filesystem;

namespace {

constexpr double blow_up_factor = 1e6;

std::string in_dir(const Config& c, const std::string& name) { return (fs::path(c.output_dir) / name).string(); }

double kinetic_energy(const SimState& s) {
  const double v = lp_norm(s.u, 2.0);
  return 0.5 * v * v;
}

void require_grid(const Grid& g, const Config& c, const std::string& what) {
  if (g.dim() != c.dim) throw ConfigError("dim", what + " has dim " + std::to_string(g.dim()));
  if (g.n() != c.n) throw ConfigError("n", what + " has n " + std::to_string(g.n()));
  if (g.length() != c.length) throw ConfigError("length", what + " has a different box length");
}

/// Steps from `first_step` to the configured end; the state is at step
/// first_step on entry. Rows are appended to the CSV as they are produced.
RunResult advance(SimState state, long first_step, const Config& c, bool record_first) {
  const SimParams p = c.params();
  const long last_step = c.total_steps();
  const std::string csv = in_dir(c, diagnostics_file);
  RunResult result;

  DiagnosticsRecord rec = diagnose(state, p);
  EnergyLawMonitor monitor;
  monitor.reset(law_energy(rec, p.model), rec.dissipation);
  if (record_first) {
    append_csv(csv, rec);
    result.records.push_back(rec);
  }
  const double reference = std::max(rec.kinetic, rec.total_E);

  for (long s = first_step + 1; s <= last_step; ++s) {
    SimState next;
    try {
      next = step(state, p);
      next.t = static_cast<double>(s) * p.dt;
      const double k = kinetic_energy(next);
      if (!std::isfinite(k) || (reference > 0.0 && k > blow_up_factor * reference))
        throw BlowUpError("kinetic energy grew from " + std::to_string(reference) + " to " + std::to_string(k),
                          next.t);
    } catch (const BlowUpError&) {
      write_snapshot(state, p, in_dir(c, last_good_snapshot_file));
      throw;
    }
    state = std::move(next);
    ++result.steps;

    const bool on_row = s % c.save_every == 0 || s == last_step;
    if (on_row) {
      rec = diagnose(state, p);
      monitor.add_step(p.dt, rec.dissipation);
      const double e = law_energy(rec, p.model);
      rec.energy_residual = monitor.residual(e);
      monitor.reset(e, rec.dissipation);
      append_csv(csv, rec);
      result.records.push_back(rec);
    } else {
      monitor.add_step(p.dt, dissipation(state, p));
    }
    if (c.snapshot_every > 0 && s % c.snapshot_every == 0) write_snapshot(state, p, in_dir(c, snapshot_name(s)));
  }
  write_snapshot(state, p, in_dir(c, final_snapshot_file));
  result.state = std::move(state);
  return result;
}

}  // namespace

std::string snapshot_name(long step) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "snapshot_%08ld.nlc1", step);
  return buf;
}

SimState make_initial_state(const Config& c) {
  c.validate();
  if (c.init.rfind("file:", 0) == 0) {
    Snapshot snap = read_snapshot(c.init.substr(5));
    require_grid(snap.state.u.grid(), c, "init snapshot");
    snap.state.t = 0.0;
    return std::move(snap.state);
  }
  return initial_state(c.grid(), c.init, c.seed);
}

RunResult run(const Config& c) {
  SimState s = make_initial_state(c);
  fs::create_directories(c.output_dir);
  {
    std::ofstream f(in_dir(c, config_file), std::ios::trunc);
    f << serialize_config(c);
  }
  std::ofstream(in_dir(c, diagnostics_file), std::ios::trunc).close();
  return advance(std::move(s), 0, c, true);
}

RunResult resume(const std::string& snapshot_path, const Config& c) {
  c.validate();
  Snapshot snap = read_snapshot(snapshot_path);
  require_grid(snap.state.u.grid(), c, "snapshot");
  const double steps = snap.state.t / c.dt;
  const long first = std::lround(steps);
  if (std::abs(steps - static_cast<double>(first)) > 1e-6)
    throw ConfigError("dt", "snapshot time is not a whole number of steps");
  if (first > c.total_steps()) throw ConfigError("t_end", "snapshot is already past t_end");
  fs::create_directories(c.output_dir);
  snap.state.t = static_cast<double>(first) * c.dt;
  return advance(std::move(snap.state), first, c, false);
}

ConvergenceResult convergence_study(const Config& config, const std::vector<double>& dts) {
  if (config.dim != 2) throw ConfigError("dim", "the convergence study runs in two dimensions");
  if (dts.size() < 2) throw ConfigError("dts", "at least two time steps are required");
  ConvergenceResult r;
  r.dts = dts;
  const Grid g = config.grid();
  const SimState init = taylor_green_uniform_d(g);
  for (double dt : dts) {
    Config c = config;
    c.dt = dt;
    c.init = "taylor-green-uniform-d";
    c.validate();
    const SimParams p = c.params();
    const long steps = c.total_steps();
    if (std::abs(static_cast<double>(steps) * dt - c.t_end) > 1e-9 * std::max(1.0, c.t_end))
      throw ConfigError("dts", "t_end is not a multiple of dt");
    SimState s = init;
    for (long i = 0; i < steps; ++i) s = step(s, p);
    const double decay = std::exp(-viscous_symbol(p, 2.0 * g.k0() * g.k0()) * c.t_end);
    const VectorField exact = decay * init.u;
    r.errors.push_back(lp_norm(s.u - exact, 2.0) / lp_norm(exact, 2.0));
  }
  for (std::size_t i = 0; i + 1 < dts.size(); ++i)
    r.orders.push_back(std::log(r.errors[i] / r.errors[i + 1]) / std::log(dts[i] / dts[i + 1]));
  return r;
}

}  // namespace nlc
