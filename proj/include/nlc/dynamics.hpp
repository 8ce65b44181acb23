#pragma once

#include <stdexcept>
#include <string>

#include "nlc/field.hpp"

namespace nlc {

enum class Model { lc, lc_alpha };
enum class Integrator { imex1, imex2 };

const char* to_string(Model m);
const char* to_string(Integrator i);

/// Physical and numerical parameters of a run.
struct SimParams {
  double nu = 0.1;       ///< kinematic viscosity
  double lambda = 1.0;   ///< elastic constant
  double gamma = 1.0;    ///< director relaxation rate
  double epsilon = 0.1;  ///< Ginzburg-Landau penalization length
  double alpha = 0.0;    ///< averaging scale, lc-alpha only
  double dt = 1e-3;
  Model model = Model::lc;
  bool dealias = true;
  Integrator integrator = Integrator::imex1;

  /// Throws std::invalid_argument naming the offending parameter. nu and
  /// lambda may be zero (inviscid or uncoupled runs); gamma, epsilon and dt
  /// must be positive; model lc requires alpha = 0.
  void validate() const;
};

/// Velocity and director at time t. The director has dim components.
struct SimState {
  double t = 0.0;
  VectorField u;
  VectorField d;
};

/// Raised when a step produces non-finite values or the kinetic energy
/// explodes; carries the simulation time of the failure.
class BlowUpError : public std::runtime_error {
public:
  BlowUpError(const std::string& what, double time) : std::runtime_error(what), time_(time) {}
  double time() const { return time_; }

private:
  double time_;
};

/// Ginzburg-Landau force f(d) = (|d|^2 - 1) d / epsilon^2, pointwise.
VectorField gl_force(const VectorField& d, double epsilon, bool dealias = true);
/// Integral of F(d) = (|d|^2 - 1)^2 / (4 epsilon^2).
double gl_potential(const VectorField& d, double epsilon);

/// (u . grad) w, componentwise.
VectorField advect(const VectorField& u, const VectorField& w, bool dealias = true);

/// Div(grad d^T . grad d): component j is sum_i d_i (d_i d^k d_j d^k).
VectorField elastic_stress_div(const VectorField& d, bool dealias = true);

/// Lagrangian-averaged dispersion term
///   alpha^2 (1 - alpha^2 Lap)^{-1} Div[G G^T + G G - G^T G],  G(a, b) = d_b u_a,
/// with the divergence contracting the derivative index b. Enters the
/// momentum equation on the left-hand side.
VectorField lans_correction(const VectorField& u, double alpha, bool dealias = true);

/// Explicit part of du/dt (viscosity excluded), Leray-projected.
VectorField momentum_rhs(const SimState& state, const SimParams& params);
/// Explicit part of dd/dt (director diffusion excluded).
VectorField director_rhs(const SimState& state, const SimParams& params);

/// Symbol of the implicit viscous operator at |k|^2: nu |k|^2 / 2 for lc
/// (Div Def = Lap / 2 on solenoidal fields), nu |k|^2 for lc-alpha.
double viscous_symbol(const SimParams& params, double k2);

/// Advances the state by params.dt; the result has the representation of
/// state.u. Throws BlowUpError on non-finite output.
SimState step(const SimState& state, const SimParams& params);

}  // namespace nlc
