#pragma once

#include <utility>

#include "maxdirac/types.hpp"

namespace maxdirac {

/// Transverse electromagnetic frame at one point. Components may be complex;
/// for physical fields use real components.
struct FieldFrame {
  Vec3c E = Vec3c::Zero();
  Vec3c H = Vec3c::Zero();
};

/// The ordered pair (a, b) of transverse axes whose E/H components fill the
/// bispinor slots for a given propagation axis and orientation.
std::pair<Axis, Axis> transverse_axes(Axis axis, Orientation orientation);

/// psi = (E_a, E_b, i H_a, i H_b) for the advanced kind; the retarded kind
/// flips the signs of components 2 and 4. Throws NotTransverse if the frame
/// has a component along the propagation axis beyond eps.
Bispinor field_to_bispinor(const FieldFrame& f, Axis axis, Orientation orientation,
                           WaveKind kind = WaveKind::advanced, Real eps = eps_alg);

/// Inverse of field_to_bispinor; the axis component of the result is zero.
FieldFrame bispinor_to_field(const Bispinor& psi, Axis axis, Orientation orientation,
                             WaveKind kind = WaveKind::advanced);

/// Flips the signs of components 2 and 4 (an involution).
Bispinor charge_conjugate(const Bispinor& psi);

/// Conjugate transpose as an explicit row vector.
RowBispinor hermitian_row(const Bispinor& psi);

/// Bispinor of the primed representation for a frame transverse to y:
/// (sqrt(2)/2) * (E_x + iH_x, E_z + iH_z, E_z - iH_z, -(E_x - iH_x)).
/// Satisfies unitary_S() * primed_bispinor(f) == field_to_bispinor(f, y, negative).
Bispinor primed_bispinor(const FieldFrame& f, Real eps = eps_alg);

}  // namespace maxdirac
