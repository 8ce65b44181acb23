#pragma once

#include <cstdint>
#include <string_view>

#include "nlc/dynamics.hpp"

namespace nlc {

/// Taylor-Green velocity, director the first unit vector.
/// 2D: u = (sin x cos y, -cos x sin y); 3D: u = (sin x cos y cos z, -cos x sin y cos z, 0).
SimState taylor_green_uniform_d(const Grid& g);

/// Zero velocity and a director with one +1 and one -1 winding center,
/// d = tanh(|psi| / core) psi / |psi| for the periodic complex function
///   psi = -sin y + i (cos x + 0.75 (1 + cos y)),
/// whose only zeros are (pi/2, pi) and (3pi/2, pi). |d| <= 1 everywhere.
/// In 3D the pattern is extruded along z with zero third component.
SimState vortex_pair(const Grid& g, double core = 0.25);

/// Seeded band-limited data: solenoidal u with modes |k_j| <= 4 and rms 0.5,
/// unit director d = (cos th, sin th) (3D: tilted out of plane by a small
/// band-limited angle) with th = x + a band-limited perturbation, so d winds
/// once along x and relaxes to a non-constant equilibrium.
SimState random_seeded(const Grid& g, std::uint64_t seed);

/// Dispatches on the configuration name: "taylor-green-uniform-d",
/// "vortex-pair" or "random-seeded". Throws std::invalid_argument otherwise.
SimState initial_state(const Grid& g, std::string_view name, std::uint64_t seed);

}  // namespace nlc
