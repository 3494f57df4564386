#include "maxdirac/bilinears.hpp"

#include <numbers>

namespace maxdirac {

Complex bilinear(const Bispinor& psi, const Matrix4& m) {
  return (psi.adjoint() * m * psi)(0, 0);
}

Vec3c poynting_bilinears(const Bispinor& psi, const MatrixFamily& family) {
  Vec3c v;
  for (int j = 0; j < 3; ++j) v[j] = bilinear(psi, dirac_matrix(family.slot[j]));
  return v;
}

InvariantReport invariant_report(const FieldFrame& f, Axis axis, Orientation orientation,
                                 WaveKind kind, Real c) {
  const Bispinor psi = field_to_bispinor(f, axis, orientation, kind);
  const MatrixFamily fam = matrix_family(axis, orientation);
  constexpr Real pi = std::numbers::pi;
  InvariantReport r;
  r.scalar_I1 = bilinear(psi, dirac_matrix(Alpha::alpha4)) / (8 * pi);
  r.pseudoscalar_EH = bilinear(psi, dirac_matrix(Alpha::alpha5)) / 2.0;
  r.energy_density_8piU = bilinear(psi, dirac_matrix(Alpha::alpha0));
  r.momentum_row = poynting_bilinears(psi, fam);
  r.poynting = -(c / (8 * pi)) * r.momentum_row;
  return r;
}

std::pair<Complex, Complex> fierz_both_sides(const Bispinor& psi) {
  auto b = [&](Alpha a) { return bilinear(psi, dirac_matrix(a)); };
  const Complex lhs = b(Alpha::alpha0) * b(Alpha::alpha0) - b(Alpha::alpha1) * b(Alpha::alpha1) -
                      b(Alpha::alpha2) * b(Alpha::alpha2) - b(Alpha::alpha3) * b(Alpha::alpha3);
  const Complex rhs = b(Alpha::alpha4) * b(Alpha::alpha4) + b(Alpha::alpha5) * b(Alpha::alpha5);
  return {lhs, rhs};
}

}  // namespace maxdirac
