#include "maxdirac/lagrangian.hpp"

#include <cmath>
#include <numbers>

#include "maxdirac/bilinears.hpp"
#include "maxdirac/sim.hpp"
#include "maxdirac/system_signs.hpp"

namespace maxdirac {

namespace {

constexpr Complex iu{0, 1};
const Real kPi = std::numbers::pi;

Complex dot_plain(const Vec3c& a, const Vec3c& b) { return (a.array() * b.array()).sum(); }

Real effective_coupling(const SelfActionParams& p) {
  return p.coupling != 0 ? p.coupling : p.delta_tau / (8 * kPi);
}

EquationSpec pinned_spec(Real mass_omega) {
  EquationSpec spec;
  spec.mass_omega = mass_omega;
  return spec;
}

}  // namespace

Complex lagrangian_em(const FieldFrame& f) {
  return (dot_plain(f.E, f.E) - dot_plain(f.H, f.H)) / (8 * kPi);
}

Complex lagrangian_dirac(const Bispinor& psi, const Bispinor& dpsi_dt, const Bispinor& dpsi_du,
                         Real mass_omega, const EquationSpec& spec, Real c) {
  const SystemSigns signs = system_signs(spec);
  const Matrix4& W = dirac_matrix(matrix_family(spec.axis, spec.orientation).working());
  const Matrix4& beta = dirac_matrix(Alpha::alpha4);

  const Complex kinetic_t = (psi.adjoint() * dpsi_dt)(0, 0) / c;
  const Complex kinetic_u = (psi.adjoint() * (W * dpsi_du))(0, 0);
  const Complex mass = (psi.adjoint() * (beta * psi))(0, 0);
  return kinetic_t - static_cast<Real>(signs.spatial) * kinetic_u -
         iu * static_cast<Real>(signs.mass) * (mass_omega / c) * mass;
}

LsTerms lagrangian_field_terms(const FieldFrame& f, const FieldFrame& df_dt,
                               const FieldFrame& df_du, Axis axis, Real omega_s, Real c) {
  LsTerms out;
  out.dU_dt = (dot_plain(f.E, df_dt.E) + dot_plain(f.H, df_dt.H)) / (4 * kPi);
  const Vec3c poynting_rate = df_du.E.cross(f.H) + f.E.cross(df_du.H);
  out.div_S = (c / (4 * kPi)) * poynting_rate[axis_index(axis)];
  out.invariant_term =
      -iu * (omega_s / (8 * kPi)) * (dot_plain(f.E, f.E) - dot_plain(f.H, f.H));
  return out;
}

Currents currents(const FieldFrame& f, Real omega_s) {
  Currents out;
  out.j_e = iu * (omega_s / (4 * kPi)) * f.E;
  out.j_m = iu * (omega_s / (4 * kPi)) * f.H;
  return out;
}

Complex current_balance_term(const FieldFrame& f, Real omega_s) {
  const Currents j = currents(f, omega_s);
  return -0.5 * (dot_plain(j.j_e, f.E) - dot_plain(j.j_m, f.H));
}

Real self_energy_exact(std::span<const Bispinor> states, Real dx) {
  if (states.empty() || dx <= 0) throw EmptyRegion("self-energy needs a sampled region");
  Real sum = 0;
  for (const auto& psi : states) sum += psi.squaredNorm();
  return sum * dx / (8 * kPi);
}

Real self_energy_approx(const Bispinor& psi, Real delta_tau) {
  return (delta_tau / (8 * kPi)) * psi.squaredNorm();
}

Vec3c self_momentum_approx(const Bispinor& psi, Real delta_tau, Real c,
                           const MatrixFamily& family) {
  Vec3c out = Vec3c::Zero();
  for (int comp = 0; comp < 3; ++comp)
    out[comp] = -(delta_tau / (8 * kPi * c)) *
                bilinear(psi, dirac_matrix(family.slot[static_cast<size_t>(comp)]));
  return out;
}

SelfActionParams SelfActionParams::from_zeta_rs(Real zeta, Real r_s, Real omega_s, Real c) {
  SelfActionParams p;
  p.zeta = zeta;
  p.r_s = r_s;
  p.delta_tau = zeta * r_s * r_s * r_s;
  p.omega_s = omega_s;
  p.c = c;
  p.coupling = p.delta_tau / (8 * kPi);
  return p;
}

void SelfActionParams::validate() const {
  const Real expected = zeta * r_s * r_s * r_s;
  if (std::abs(delta_tau - expected) > 1e-12 * std::max<Real>(1, std::abs(expected)))
    throw InvalidSpec("delta_tau is not zeta * r_s^3");
  if (delta_tau <= 0) throw InvalidSpec("delta_tau must be positive");
  if (c <= 0) throw InvalidSpec("c must be positive");
}

Bispinor nonlinear_residual(const Bispinor& psi0, Real k, Real omega,
                            const SelfActionParams& p) {
  const MatrixFamily family = matrix_family(Axis::y, Orientation::negative);
  const Matrix4& W = dirac_matrix(family.working());

  const Real eps_s = self_energy_approx(psi0, p.delta_tau);
  const Vec3c p_s = self_momentum_approx(psi0, p.delta_tau, p.c, family);
  const Real p_s_axis = std::real(p_s[axis_index(family.axis)]);

  return (omega - eps_s) * psi0 + p.c * (k - p_s_axis) * (W * psi0);
}

NonlinearResult solve_self_consistent_amplitude(Real omega, Real k, const SelfActionParams& p,
                                                const NonlinearOptions& opt) {
  p.validate();
  if (omega <= 0) throw InvalidSpec("omega must be positive");
  if (opt.damping <= 0 || opt.damping > 1) throw InvalidSpec("damping must be in (0, 1]");
  const Real light = p.c * std::abs(k);
  if (omega < light * (1 - 1e-12)) throw InvalidSpec("omega below the light line");

  NonlinearResult res;
  res.omega = omega;

  const bool on_light_line = std::abs(omega - light) <= 1e-9 * std::max<Real>(1, omega);
  const Real mass_equiv = on_light_line ? 0 : std::sqrt(omega * omega - light * light);
  const PlaneWave shape = analytic_plane_wave(k, mass_equiv, p.c, 0, pinned_spec(mass_equiv));

  if (on_light_line) {
    res.status = NonlinearResult::Status::degenerate_family;
    res.amplitude_sq = opt.initial_amplitude_sq;
    res.psi0 = std::sqrt(res.amplitude_sq) * shape.psi0;
    res.eps_s = self_energy_approx(res.psi0, p.delta_tau);
    res.trace.push_back(
        {0, res.amplitude_sq, nonlinear_residual(res.psi0, k, omega, p).norm()});
    return res;
  }

  Real a_sq = opt.initial_amplitude_sq;
  for (int iter = 0; iter <= opt.max_iter; ++iter) {
    const Bispinor psi0 = std::sqrt(a_sq) * shape.psi0;
    const Real eps_s = self_energy_approx(psi0, p.delta_tau);
    res.trace.push_back({iter, a_sq, nonlinear_residual(psi0, k, omega, p).norm()});
    if (std::abs(eps_s - omega) <= opt.tol * omega) {
      res.status = NonlinearResult::Status::converged;
      res.amplitude_sq = a_sq;
      res.eps_s = eps_s;
      res.psi0 = psi0;
      return res;
    }
    if (eps_s > 0) a_sq = a_sq * ((1 - opt.damping) + opt.damping * omega / eps_s);
  }

  res.status = NonlinearResult::Status::no_convergence;
  res.amplitude_sq = a_sq;
  res.eps_s = self_energy_approx(std::sqrt(a_sq) * shape.psi0, p.delta_tau);
  res.psi0 = std::sqrt(a_sq) * shape.psi0;
  return res;
}

NonlinearLagrangian nonlinear_lagrangian(const Bispinor& psi, const Bispinor& dpsi_dt,
                                         const Bispinor& dpsi_du, Axis axis,
                                         Orientation orientation, const SelfActionParams& p,
                                         Real em_scale) {
  if (em_scale <= 0) throw InvalidSpec("em_scale must be positive");
  const MatrixFamily family = matrix_family(axis, orientation);
  const Matrix4& W = dirac_matrix(family.working());
  const Real g = effective_coupling(p);

  NonlinearLagrangian out;
  out.kinetic =
      (psi.adjoint() * dpsi_dt)(0, 0) / p.c - (psi.adjoint() * (W * dpsi_du))(0, 0);

  const Complex b0 = bilinear(psi, dirac_matrix(Alpha::alpha0));
  Complex momentum_sq = 0;
  for (const Alpha a : family.slot) {
    const Complex bj = bilinear(psi, dirac_matrix(a));
    momentum_sq += bj * bj;
  }
  out.quartic = g * (b0 * b0 - momentum_sq);

  const Complex b4 = bilinear(psi, dirac_matrix(Alpha::alpha4));
  const Complex b5 = bilinear(psi, dirac_matrix(Alpha::alpha5));
  out.quartic_fierz_form = g * (b4 * b4 + b5 * b5);

  const FieldFrame f = bispinor_to_field(psi, axis, orientation);
  const Complex i1 = dot_plain(f.E, f.E) - dot_plain(f.H, f.H);
  const Complex i2 = dot_plain(f.E, f.H);
  out.quartic_em = g / (8 * kPi * em_scale) * (i1 * i1 + 4.0 * i2 * i2);
  return out;
}

}  // namespace maxdirac
