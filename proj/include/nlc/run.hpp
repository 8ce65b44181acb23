#pragma once

#include <string>
#include <vector>

#include "nlc/config.hpp"
#include "nlc/diagnostics.hpp"

namespace nlc {

/// Output layout inside Config::output_dir.
inline constexpr const char* diagnostics_file = "diagnostics.csv";
inline constexpr const char* config_file = "config.json";
inline constexpr const char* final_snapshot_file = "final.nlc1";
inline constexpr const char* last_good_snapshot_file = "last_good.nlc1";
/// snapshot_<step, 8 digits>.nlc1
std::string snapshot_name(long step);

struct RunResult {
  SimState state;
  std::vector<DiagnosticsRecord> records;  ///< rows appended by this call
  long steps = 0;                          ///< steps taken by this call
};

/// Builds the initial state named by config.init ("file:<path>" loads the
/// fields of a snapshot and restarts the clock at 0).
SimState make_initial_state(const Config& config);

/// Fresh run: creates output_dir, writes config.json, truncates the CSV and
/// records the initial state, a row every save_every steps and the final
/// state. Snapshots every snapshot_every steps plus final.nlc1.
///
/// On blow-up (non-finite fields, or kinetic energy above 1e6 times the
/// initial energy) the last finite state goes to last_good.nlc1 and the
/// BlowUpError propagates.
RunResult run(const Config& config);

/// Continues a snapshot to config.t_end with the parameters of config,
/// appending to the CSV. The grid of the snapshot must match the config.
/// Resuming from a snapshot taken on a row boundary reproduces the rows and
/// final state of the uninterrupted run bit for bit.
RunResult resume(const std::string& snapshot_path, const Config& config);

struct ConvergenceResult {
  std::vector<double> dts;
  std::vector<double> errors;  ///< relative L2 velocity error at t_end
  std::vector<double> orders;  ///< log2-type slopes between consecutive dts
};

/// Time-step study on the two-dimensional Taylor-Green flow with a uniform
/// director, whose velocity decays as exp(-mu t) with mu the viscous symbol
/// at the flow's wavenumber. Nothing is written to disk.
ConvergenceResult convergence_study(const Config& config, const std::vector<double>& dts);

}  // namespace nlc
