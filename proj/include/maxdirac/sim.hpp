#pragma once

#include <utility>
#include <vector>

#include "maxdirac/spinor_map.hpp"
#include "maxdirac/types.hpp"

namespace maxdirac {

Real dispersion_omega(Real k, Real mass_omega, Real c);

/// Plane-wave amplitude psi0 with frequency omega = dispersion_omega(k) for
/// the system selected by spec, psi(t, u) = psi0 * exp(i(omega t - k u)).
struct PlaneWave {
  Real omega = 0;
  Bispinor psi0 = Bispinor::Zero();
};

/// Deterministic orthonormal basis of the positive-frequency eigenspace
/// (rank 2; polarization selects the basis vector). Throws NoEigenvector if
/// the requested frequency fails the dispersion relation.
PlaneWave analytic_plane_wave(Real k, Real mass_omega, Real c, int polarization,
                              const EquationSpec& spec = {});

struct InitialData {
  enum class Kind { plane_wave, custom };
  Kind kind = Kind::plane_wave;
  int k_mode = 1;
  Complex amplitude = 1.0;
  int polarization = 0;
  /// Project the mapped E/H components to their real parts before mapping
  /// back (yields real-field data; a solution when mass_omega == 0).
  bool real_fields = false;
  std::vector<Bispinor> grid;  // kind == custom
};

struct SimConfig {
  int n_cells = 256;
  Real domain_length = 2 * 3.14159265358979323846;
  Real c = 1.0;
  Real dt = 0.0;  // <= 0: derived from cfl
  Real cfl = 0.5;
  int n_steps = 0;
  int probe_cell = 0;
  EquationSpec spec;  // spec.mass_omega is the mass parameter of the run
  InitialData initial;
};

struct SimState {
  Real t = 0;
  Real dx = 0;
  Grid4 grid;  // column j = bispinor at cell j
};

struct ConservationTrace {
  std::vector<Real> t;
  std::vector<Real> total_energy;
  std::vector<Real> total_poynting_flux_divergence;
  std::vector<Real> balance_residual_with_currents;
  std::vector<Complex> probe;
};

Real resolve_dt(const SimConfig& cfg);

SimState initial_state(const SimConfig& cfg);

/// Fill a grid with psi0 * exp(-i k u_j) at t = 0.
std::vector<Bispinor> plane_wave_grid(const PlaneWave& w, Real k, int n_cells, Real dx);

/// Semi-discrete right-hand side: dpsi/dt on the current grid (4th-order
/// centered differences, periodic).
Grid4 rhs(const SimState& s, const SimConfig& cfg);

/// One classical 4th-order step. Throws CflViolation if c*dt/dx > cfl.
void step(SimState& s, const SimConfig& cfg);

/// Run n_steps, recording the trace (n_steps + 1 rows including t = 0).
/// Throws NumericalBlowup if any |psi| exceeds 1e12.
std::pair<SimState, ConservationTrace> run(const SimConfig& cfg);

/// Dominant angular frequency of a uniformly sampled complex series by FFT
/// peak with parabolic interpolation. Requires the peak to cover >= 8 cycles
/// of the window, else throws InsufficientSamples.
Real measure_dispersion(const std::vector<Complex>& probe, Real dt);

}  // namespace maxdirac
