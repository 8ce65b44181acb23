#pragma once

// Spectral differential operators on the periodic box.
//
// All operators accept either representation and return their result in the
// representation of their (first) input. Derivatives are exact Fourier
// multipliers i k_j with the Nyquist wavenumber mapped to zero.

#include "nlc/field.hpp"

namespace nlc {

VectorField gradient(const Field& f);
/// J(a, b) = d_b v_a.
TensorField jacobian(const VectorField& v);
Field divergence(const VectorField& v);
/// (Div T)_a = sum_b d_b T(a, b).
VectorField divergence(const TensorField& t);
Field laplacian(const Field& f);
VectorField laplacian(const VectorField& v);
/// Three-dimensional curl; throws std::invalid_argument unless dim = 3.
VectorField curl(const VectorField& v);

/// Removes the gradient part: mode-wise (I - k k^T / |k|^2), identity at k = 0.
VectorField leray_project(const VectorField& v);

/// Applies (1 - alpha^2 Laplacian)^{-1}; throws std::invalid_argument if alpha < 0.
Field helmholtz_inverse(const Field& f, double alpha);
VectorField helmholtz_inverse(const VectorField& v, double alpha);
/// Applies (1 - alpha^2 Laplacian).
Field helmholtz(const Field& f, double alpha);
VectorField helmholtz(const VectorField& v, double alpha);

/// 2/3-rule truncation: zeroes every mode with some |k_j| > n/3 (in units of 2 pi / L).
Field dealias(const Field& f);
VectorField dealias(const VectorField& v);

/// Def u = (grad u + grad u^T) / 2.
TensorField def_tensor(const VectorField& u);

/// Discrete L^p norm with p in {2, 4, 8, inf}; pass p = 0 for infinity.
/// For vector fields the pointwise Euclidean length is used.
/// p = 2 accepts spectral input; other p need physical samples.
double lp_norm(const Field& f, double p);
double lp_norm(const VectorField& v, double p);
constexpr double infinity_norm = 0.0;

double l2_inner(const Field& a, const Field& b);
double l2_inner(const VectorField& a, const VectorField& b);

/// (sum_k |k|^{2s} |f_k|^2 * volume)^{1/2}, i.e. the L^2 norm of |k|^s f_k.
double hs_seminorm(const Field& f, int s);
double hs_seminorm(const VectorField& v, int s);

/// Integral of f over the box by the trapezoid (= spectral) quadrature.
double integrate(const Field& f);

}  // namespace nlc
