#pragma once

#include <span>
#include <vector>

#include "maxdirac/algebra.hpp"
#include "maxdirac/spinor_map.hpp"
#include "maxdirac/types.hpp"

namespace maxdirac {

/// (E.E - H.H) / 8pi with unconjugated products (complex for complex frames).
Complex lagrangian_em(const FieldFrame& f);

/// (1/c) psi^+ dpsi_dt - s1 psi^+ a2 dpsi_du - i s2 (omega_m/c) psi^+ a4 psi,
/// the scalar density that vanishes on solutions of the system selected by
/// spec (s1, s2 are its propagation and mass signs).
Complex lagrangian_dirac(const Bispinor& psi, const Bispinor& dpsi_dt, const Bispinor& dpsi_du,
                         Real mass_omega, const EquationSpec& spec = {}, Real c = 1.0);

/// The three summands of the field form of the same density (unconjugated
/// products): dU_dt, div_S along the axis, and the invariant current term
/// -i(omega_s/8pi)(E.E - H.H). With omega_s = 2*omega_m their sum equals
/// (c/4pi) * lagrangian_dirac on real frames, where conjugated and plain
/// products coincide (negative orientation, default signs).
struct LsTerms {
  Complex dU_dt{};
  Complex div_S{};
  Complex invariant_term{};

  Complex sum() const { return dU_dt + div_S + invariant_term; }
};

LsTerms lagrangian_field_terms(const FieldFrame& f, const FieldFrame& df_dt,
                               const FieldFrame& df_du, Axis axis, Real omega_s, Real c = 1.0);

/// j_e = i(omega_s/4pi) E, j_m = i(omega_s/4pi) H.
struct Currents {
  Vec3c j_e = Vec3c::Zero();
  Vec3c j_m = Vec3c::Zero();
};
Currents currents(const FieldFrame& f, Real omega_s);

/// -(1/2)(j_e.E - j_m.H), unconjugated products.
Complex current_balance_term(const FieldFrame& f, Real omega_s);

/// Integral of psi^+ a0 psi / 8pi over a sampled region. Throws EmptyRegion.
Real self_energy_exact(std::span<const Bispinor> states, Real dx);

/// Point approximation eps_s = (delta_tau/8pi) psi^+ a0 psi.
Real self_energy_approx(const Bispinor& psi, Real delta_tau);

/// p_s = (delta_tau/c^2) * S = -(delta_tau/8pi c) psi^+ a_j psi per slot.
Vec3c self_momentum_approx(const Bispinor& psi, Real delta_tau, Real c,
                           const MatrixFamily& family);

struct SelfActionParams {
  Real zeta = 1.0;
  Real r_s = 1.0;
  Real delta_tau = 1.0;  // = zeta * r_s^3
  Real omega_s = 0.0;
  Real c = 1.0;
  /// Collapsed quartic prefactor, derived as delta_tau / 8pi unless overridden.
  Real coupling = 0.0;

  static SelfActionParams from_zeta_rs(Real zeta, Real r_s, Real omega_s = 0.0, Real c = 1.0);
  void validate() const;  // delta_tau == zeta*r_s^3 to 1e-12, throws InvalidSpec
};

/// [a0 (omega - eps_s) + c a2 (k - p_s_axis)] psi0 with eps_s, p_s computed
/// from psi0 (energies in frequency units).
Bispinor nonlinear_residual(const Bispinor& psi0, Real k, Real omega,
                            const SelfActionParams& p);

struct NonlinearTraceRow {
  int iter = 0;
  Real amplitude_sq = 0;
  Real residual_norm = 0;
};

struct NonlinearResult {
  enum class Status { converged, degenerate_family, no_convergence };
  Status status = Status::no_convergence;
  Real amplitude_sq = 0;
  Real eps_s = 0;
  Real omega = 0;
  Bispinor psi0 = Bispinor::Zero();
  std::vector<NonlinearTraceRow> trace;
};

struct NonlinearOptions {
  Real initial_amplitude_sq = 1.0;
  Real damping = 0.5;
  Real tol = 1e-12;
  int max_iter = 200;
};

/// Damped fixed-point iteration on |psi0|^2 for the self-consistent
/// amplitude at (omega, k), omega >= c k. On the light line the amplitude is
/// unconstrained and the result reports degenerate_family.
NonlinearResult solve_self_consistent_amplitude(Real omega, Real k, const SelfActionParams& p,
                                                const NonlinearOptions& opt = {});

/// Quartic self-action Lagrangian in both bilinear forms plus the field form
/// of its quartic part. L_N and L_N_fierz_form agree on every bispinor (the
/// quadratic identity is unconditional); the field form agrees on real frames.
struct NonlinearLagrangian {
  Complex kinetic{};
  Complex quartic{};            // (coupling) * [(psi^+ a0 psi)^2 - sum_j (psi^+ aj psi)^2]
  Complex quartic_fierz_form{}; // (coupling) * [(psi^+ a4 psi)^2 + (psi^+ a5 psi)^2]
  Complex quartic_em{};         // (coupling/(8pi scale)) * [(E.E-H.H)^2 + 4(E.H)^2]
  Complex L_N() const { return kinetic + quartic; }
  Complex L_N_fierz_form() const { return kinetic + quartic_fierz_form; }
};

NonlinearLagrangian nonlinear_lagrangian(const Bispinor& psi, const Bispinor& dpsi_dt,
                                         const Bispinor& dpsi_du, Axis axis, Orientation orientation,
                                         const SelfActionParams& p, Real em_scale = 1.0);

}  // namespace maxdirac
