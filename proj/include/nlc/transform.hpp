#pragma once

#include "nlc/field.hpp"

namespace nlc {

/// Forward real-to-complex transform. Already-spectral input is returned
/// unchanged. Throws std::domain_error on non-finite samples.
Field to_spectral(const Field& f);
/// Inverse transform; the exact inverse of to_spectral up to round-off.
Field to_physical(const Field& f);

VectorField to_spectral(const VectorField& v);
VectorField to_physical(const VectorField& v);

/// Converts `f` to the representation `rep`.
Field as_representation(const Field& f, Representation rep);
VectorField as_representation(const VectorField& v, Representation rep);

}  // namespace nlc
