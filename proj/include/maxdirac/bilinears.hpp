#pragma once

#include <utility>

#include "maxdirac/algebra.hpp"
#include "maxdirac/spinor_map.hpp"
#include "maxdirac/types.hpp"

namespace maxdirac {

/// psi^+ m psi (components of psi conjugated on the left).
Complex bilinear(const Bispinor& psi, const Matrix4& m);

/// The three bilinears for the family's matrices in (x, y, z) slot order.
/// On transverse frames only the slot of the propagation axis is nonzero.
Vec3c poynting_bilinears(const Bispinor& psi, const MatrixFamily& family);

/// Point invariants of a transverse frame, through the bispinor map.
/// momentum_row holds the raw bilinears psi^+ a_j psi; poynting = -(c/8pi) *
/// momentum_row. scalar_I1 = psi^+ a4 psi / 8pi, pseudoscalar_EH =
/// psi^+ a5 psi / 2, energy_density_8piU = psi^+ a0 psi.
struct InvariantReport {
  Complex scalar_I1{};
  Complex pseudoscalar_EH{};
  Complex energy_density_8piU{};
  Vec3c momentum_row = Vec3c::Zero();
  Vec3c poynting = Vec3c::Zero();
};

InvariantReport invariant_report(const FieldFrame& f, Axis axis, Orientation orientation,
                                 WaveKind kind = WaveKind::advanced, Real c = 1.0);

/// Left and right side of the quartic bilinear identity:
/// (psi^+ a0 psi)^2 - sum_j (psi^+ aj psi)^2   vs
/// (psi^+ a4 psi)^2 + (psi^+ a5 psi)^2.
/// The two sides are equal for every bispinor: the five traceless matrices
/// anticommute pairwise, so the squared bilinears sum to the squared norm.
std::pair<Complex, Complex> fierz_both_sides(const Bispinor& psi);

}  // namespace maxdirac
