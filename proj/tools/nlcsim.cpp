#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nlc/config.hpp"
#include "nlc/diagnostics.hpp"
#include "nlc/run.hpp"
#include "nlc/snapshot.hpp"

namespace {

constexpr const char* version = "0.1.0";

enum Exit { ok = 0, usage_error = 1, blow_up = 2 };

void summarize(const nlc::RunResult& r, const nlc::Config& c) {
  std::printf("%ld steps, %zu rows -> %s\n", r.steps, r.records.size(), c.output_dir.c_str());
  if (!r.records.empty()) {
    const auto& last = r.records.back();
    std::printf("t = %.6g  total_E = %.10g  max_d = %.10g  div_residual = %.3g\n", last.t, last.total_E, last.max_d,
                last.div_residual);
  }
}

nlohmann::json to_json(const nlc::GnReport& r) {
  nlohmann::json j;
  j["dim"] = r.dim;
  j["n"] = r.n;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["families"] = nlohmann::json::array();
  for (const auto& f : r.families) {
    j["families"].push_back({{"family", nlc::to_string(f.family)},
                             {"evaluated", f.evaluated},
                             {"skipped", f.skipped},
                             {"max", f.max},
                             {"min", f.min},
                             {"all_finite", f.all_finite},
                             {"histogram", f.histogram}});
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-spectral nematic liquid crystal flow simulator"};
  app.require_subcommand(1);

  std::string config_path, snapshot_path;
  auto* run = app.add_subcommand("run", "Run a simulation from a JSON config");
  run->add_option("--config", config_path, "JSON config file")->required();

  auto* resume = app.add_subcommand("resume", "Continue a run from a snapshot");
  resume->add_option("--snapshot", snapshot_path, "NLC1 snapshot")->required();
  resume->add_option("--config", config_path, "JSON config file")->required();

  int probe_dim = 2, probe_n = 64;
  std::size_t probe_samples = 1000, probe_bins = 20;
  std::uint64_t probe_seed = 0;
  auto* probe = app.add_subcommand("probe-gn", "Sample interpolation-inequality ratios on random fields");
  probe->add_option("--dim", probe_dim, "Dimension (2)");
  probe->add_option("--n", probe_n, "Grid points per axis");
  probe->add_option("--samples", probe_samples, "Number of random fields");
  probe->add_option("--seed", probe_seed, "Random seed");
  probe->add_option("--bins", probe_bins, "Histogram bins");

  std::vector<double> dts;
  auto* conv = app.add_subcommand("convergence", "Time-step convergence on the Taylor-Green flow");
  conv->add_option("--config", config_path, "JSON config file")->required();
  conv->add_option("--dts", dts, "Comma-separated time steps")->required()->delimiter(',');

  auto* ver = app.add_subcommand("version", "Print the version");

  if (argc > 1 && argv[1][0] != '-') {
    bool known = false;
    for (const auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
      known = known || sub->check_name(argv[1]);
    if (!known) {
      std::cerr << "unknown subcommand '" << argv[1] << "'\n" << app.help();
      return usage_error;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return usage_error;
  }

  try {
    if (*ver) {
      std::printf("nlcsim %s\n", version);
    } else if (*run) {
      const nlc::Config c = nlc::load_config(config_path);
      summarize(nlc::run(c), c);
    } else if (*resume) {
      const nlc::Config c = nlc::load_config(config_path);
      summarize(nlc::resume(snapshot_path, c), c);
    } else if (*probe) {
      std::printf("%s\n", to_json(nlc::gn_probe(probe_dim, probe_n, probe_samples, probe_seed, probe_bins)).dump(2).c_str());
    } else if (*conv) {
      const nlc::Config c = nlc::load_config(config_path);
      const auto r = nlc::convergence_study(c, dts);
      std::printf("%-14s %-14s %s\n", "dt", "error", "order");
      for (std::size_t i = 0; i < r.dts.size(); ++i) {
        if (i == 0)
          std::printf("%-14.6g %-14.6e\n", r.dts[i], r.errors[i]);
        else
          std::printf("%-14.6g %-14.6e %.4f\n", r.dts[i], r.errors[i], r.orders[i - 1]);
      }
    }
  } catch (const nlc::BlowUpError& e) {
    std::fprintf(stderr, "blow-up at t = %.6g: %s\n", e.time(), e.what());
    return blow_up;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return usage_error;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return usage_error;
  }
  return ok;
}
