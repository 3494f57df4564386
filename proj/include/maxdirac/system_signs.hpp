#pragma once

#include "maxdirac/types.hpp"

namespace maxdirac {

/// Signs of the first-order field system selected by a spec, written as
///   d(psi)/dt = spatial * c * W * d(psi)/du + i * mass * omega_m * a4 * psi
/// over the advanced bispinor container (W is the family's working matrix).
struct SystemSigns {
  int spatial = 1;
  int mass = 1;
};

inline SystemSigns system_signs(const EquationSpec& spec) {
  const int sigma = spec.time_sign == TimeSign::plus_i ? 1 : -1;
  const int s_energy = spec.energy_sign == EnergySign::minus ? 1 : -1;
  SystemSigns s;
  s.spatial = s_energy * (spec.kind == WaveKind::retarded ? -1 : 1);
  s.mass = sigma * s_energy * (spec.side == Side::row ? -1 : 1);
  return s;
}

}  // namespace maxdirac
