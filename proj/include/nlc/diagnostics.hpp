#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nlc/dynamics.hpp"

namespace nlc {

/// One row of monitored functionals. Integrals are quadrature sums over the
/// box; |.| is the L2 norm.
struct DiagnosticsRecord {
  double t = 0.0;
  double kinetic = 0.0;          ///< |u|^2 / 2
  double elastic = 0.0;          ///< lambda |grad d|^2 / 2
  double penalty = 0.0;          ///< lambda int F(d)
  double total_E = 0.0;          ///< kinetic + elastic + penalty
  double E_alpha = 0.0;          ///< (|u|^2 + 2 alpha^2 |Def u|^2) / 2
  double dissipation = 0.0;
  double energy_residual = 0.0;  ///< filled by the run loop, 0 on the first row
  double max_d = 0.0;            ///< max |d(x)|
  double div_residual = 0.0;     ///< |div u| / |grad u|, 0 for u = 0
  double helicity = 0.0;         ///< 3D only, 0 in 2D
  double enstrophy = 0.0;        ///< |grad u|^2
};

struct EnergyComponents {
  double kinetic = 0.0;
  double elastic = 0.0;
  double penalty = 0.0;
  double total() const { return kinetic + elastic + penalty; }
};

EnergyComponents energy_components(const SimState& state, const SimParams& params);
double total_energy(const SimState& state, const SimParams& params);

/// (|u|^2 + 2 alpha^2 |Def u|^2) / 2 with alpha = params.alpha.
double averaged_energy(const SimState& state, const SimParams& params);

/// Rate of energy loss.
///   lc:       nu |Def u|^2 + lambda gamma |Lap d - f(d)|^2
///   lc-alpha: nu (|grad u|^2 + alpha^2 |Lap u|^2) + lambda gamma |Lap d - f(d)|^2
/// f(d) is dealiased when params.dealias is set, as in the dynamics.
double dissipation(const SimState& state, const SimParams& params);

/// Energy whose decay the dissipation accounts for: total_E for lc,
/// E_alpha + elastic + penalty for lc-alpha.
double law_energy(const DiagnosticsRecord& r, Model model);

/// |(E_next - E_prev) / T + Q / T| / max(Q / T, 1), where Q is the
/// dissipation integrated over the interval of length T.
double energy_law_residual(double energy_prev, double energy_next, double dissipation_integral, double interval);

/// Record form over one step of size dt, integrating the dissipation with
/// the trapezoidal rule.
double energy_law_residual(const DiagnosticsRecord& prev, const DiagnosticsRecord& next, double dt, Model model);

/// Accumulates the dissipation integral step by step between two records.
class EnergyLawMonitor {
public:
  void reset(double energy, double dissipation);
  /// Registers one step of length dt ending with dissipation `d_next`.
  void add_step(double dt, double d_next);
  /// Residual from the last reset to a state with energy `energy`.
  double residual(double energy) const;
  double interval() const { return interval_; }

private:
  double energy_ = 0.0;
  double last_d_ = 0.0;
  double integral_ = 0.0;
  double interval_ = 0.0;
};

/// Helicity int v . curl v with v = (1 - alpha^2 Lap) u.
struct Helicity {
  double value = 0.0;
  bool defined = false;  ///< false in 2D, where the value is 0 by convention
};
Helicity helicity(const VectorField& u, double alpha);

/// int kappa1 |div d|^2 + kappa2 |d x curl d|^2 + kappa3 |d . curl d|^2.
/// A 2D director is embedded as (d1, d2, 0) with no z dependence.
double frank_energy(const VectorField& d, double kappa1, double kappa2, double kappa3);

/// Every diagnostic except energy_residual.
DiagnosticsRecord diagnose(const SimState& state, const SimParams& params);

// ---------------------------------------------------------------------------
// Interpolation-inequality probe

/// Ratio families evaluated by the probe, |.| the L2 norm and |D^s v| the
/// seminorm with multiplier |k|^s:
///   agmon        |v|_inf / (|D^2 v|^1/2 |v|^1/2)
///   ladyzhenskaya |v|_L4 / (|D v|^1/2 |v|^1/2)
///   interp_1_2, interp_1_3, interp_2_3
///                |D^i v| / (|v|^(1-i/m) |D^m v|^(i/m))
///   l8           |v|_L8 / (|v|^5/8 |v|_2^3/8), |v|_2 the full H^2 norm
enum class GnFamily { agmon, ladyzhenskaya, interp_1_2, interp_1_3, interp_2_3, l8 };
constexpr int gn_family_count = 6;
const char* to_string(GnFamily f);

/// Ratios of one field; a family whose denominator vanishes is NaN.
std::array<double, gn_family_count> gn_ratios(const Field& v);

struct GnFamilyReport {
  GnFamily family;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  double max = 0.0;
  double min = 0.0;
  bool all_finite = true;
  std::vector<std::size_t> histogram;  ///< equal bins on [0, max]
};

struct GnReport {
  int dim = 2;
  int n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<GnFamilyReport> families;
};

/// Seeded random fields band-limited to |k_j| <= K with K drawn in 1..8 per
/// sample; the coefficients do not depend on n, so the same fields are
/// probed at every resolution. Throws std::invalid_argument unless dim = 2,
/// samples >= 1 and n >= 24.
GnReport gn_probe(int dim, int n, std::size_t samples, std::uint64_t seed, std::size_t bins = 20);

}  // namespace nlc
