#pragma once

#include <array>

#include "maxdirac/types.hpp"

namespace maxdirac {

/// The six 4x4 matrices of the chosen representation. alpha0 is the identity,
/// alpha4 is the diagonal parity matrix, alpha5 is the stored product
/// alpha1*alpha2*alpha3*alpha4 (computed once and cached).
const Matrix4& dirac_matrix(Alpha a, Representation rep = Representation::standard);

/// {a, b} = ab + ba
Matrix4 anticommutator(const Matrix4& a, const Matrix4& b);

bool is_hermitian(const Matrix4& m, Real eps = eps_alg);
bool is_unitary(const Matrix4& m, Real eps = eps_alg);

/// The canonical basis change between the two representations, entries in
/// {0, +-1/sqrt(2)}.
const Matrix4& unitary_S();

/// u * m * u^dagger. Throws NotUnitary if u is not unitary to eps.
Matrix4 conjugate_by(const Matrix4& u, const Matrix4& m, Real eps = eps_alg);

/// Assignment of one matrix to each spatial derivative slot for a propagation
/// axis. The matrix paired with the propagation axis itself (the "working"
/// matrix, the only one with a nonzero momentum bilinear on transverse
/// frames) is always alpha2.
struct MatrixFamily {
  Axis axis;
  Orientation orientation;
  std::array<Alpha, 3> slot;  // indexed by axis_index: matrices for dx, dy, dz

  Alpha working() const { return slot[axis_index(axis)]; }
};

MatrixFamily matrix_family(Axis axis, Orientation orientation);

/// Aligned text grid with entries rendered as 0, 1, -1, i, -i, 1/sqrt(2), ...
std::string format_matrix(const Matrix4& m);

}  // namespace maxdirac
