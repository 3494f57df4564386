#include "maxdirac/spinor_map.hpp"

#include "maxdirac/algebra.hpp"

namespace maxdirac {

namespace {

constexpr Complex iu{0, 1};

void require_transverse(const FieldFrame& f, Axis axis, Real eps, const char* who) {
  const int a = axis_index(axis);
  if (std::abs(f.E[a]) > eps || std::abs(f.H[a]) > eps)
    throw NotTransverse(std::string(who) + ": frame has a component along " + to_string(axis));
}

}  // namespace

std::pair<Axis, Axis> transverse_axes(Axis axis, Orientation orientation) {
  // Printed component pairs: negative orientation (x,z), (z,y), (y,x) for
  // y, x, z; the positive orientation swaps each pair.
  std::pair<Axis, Axis> pair;
  switch (axis) {
    case Axis::y: pair = {Axis::x, Axis::z}; break;
    case Axis::x: pair = {Axis::z, Axis::y}; break;
    case Axis::z: pair = {Axis::y, Axis::x}; break;
  }
  if (orientation == Orientation::positive) std::swap(pair.first, pair.second);
  return pair;
}

Bispinor field_to_bispinor(const FieldFrame& f, Axis axis, Orientation orientation,
                           WaveKind kind, Real eps) {
  require_transverse(f, axis, eps, "field_to_bispinor");
  const auto [a, b] = transverse_axes(axis, orientation);
  Bispinor psi;
  psi << f.E[axis_index(a)], f.E[axis_index(b)], iu * f.H[axis_index(a)], iu * f.H[axis_index(b)];
  return kind == WaveKind::advanced ? psi : charge_conjugate(psi);
}

FieldFrame bispinor_to_field(const Bispinor& psi_in, Axis axis, Orientation orientation,
                             WaveKind kind) {
  const Bispinor psi = kind == WaveKind::advanced ? psi_in : charge_conjugate(psi_in);
  const auto [a, b] = transverse_axes(axis, orientation);
  FieldFrame f;
  f.E[axis_index(a)] = psi[0];
  f.E[axis_index(b)] = psi[1];
  f.H[axis_index(a)] = -iu * psi[2];
  f.H[axis_index(b)] = -iu * psi[3];
  return f;
}

Bispinor charge_conjugate(const Bispinor& psi) {
  Bispinor r;
  r << psi[0], -psi[1], psi[2], -psi[3];
  return r;
}

RowBispinor hermitian_row(const Bispinor& psi) { return psi.adjoint(); }

Bispinor primed_bispinor(const FieldFrame& f, Real eps) {
  require_transverse(f, Axis::y, eps, "primed_bispinor");
  const Real r = std::sqrt(2.0) / 2.0;
  const Complex ex = f.E[0], ez = f.E[2], hx = f.H[0], hz = f.H[2];
  Bispinor psi;
  psi << r * (ex + iu * hx), r * (ez + iu * hz), r * (ez - iu * hz), -r * (ex - iu * hx);
  return psi;
}

}  // namespace maxdirac
