#include "maxdirac/sim.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <numbers>
#include <vector>

#include "maxdirac/algebra.hpp"
#include "maxdirac/bilinears.hpp"
#include "maxdirac/lagrangian.hpp"
#include "maxdirac/system_signs.hpp"

namespace maxdirac {

namespace {

constexpr Complex iu{0, 1};

Grid4 central_derivative(const Grid4& g, Real dx) {
  const Eigen::Index n = g.cols();
  Grid4 out(4, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index jp1 = (j + 1) % n, jp2 = (j + 2) % n;
    const Eigen::Index jm1 = (j + n - 1) % n, jm2 = (j + n - 2) % n;
    out.col(j) = (8.0 * (g.col(jp1) - g.col(jm1)) - (g.col(jp2) - g.col(jm2))) / (12.0 * dx);
  }
  return out;
}

void validate(const SimConfig& cfg) {
  if (cfg.n_cells < 8) throw InvalidSpec("n_cells must be at least 8");
  if (cfg.domain_length <= 0) throw InvalidSpec("domain_length must be positive");
  if (cfg.c <= 0) throw InvalidSpec("c must be positive");
  if (cfg.cfl <= 0) throw InvalidSpec("cfl must be positive");
  if (cfg.n_steps < 0) throw InvalidSpec("n_steps must be non-negative");
  if (cfg.probe_cell < 0 || cfg.probe_cell >= cfg.n_cells)
    throw InvalidSpec("probe_cell out of range");
  if (cfg.spec.mass_omega < 0) throw InvalidSpec("mass_omega must be non-negative");
}

void record(const SimState& s, const SimConfig& cfg, ConservationTrace& trace) {
  const SystemSigns signs = system_signs(cfg.spec);
  const Matrix4& W = dirac_matrix(matrix_family(cfg.spec.axis, cfg.spec.orientation).working());
  const Matrix4& beta = dirac_matrix(Alpha::alpha4);
  const Real pi = std::numbers::pi;
  const Eigen::Index n = s.grid.cols();

  const Grid4 r = rhs(s, cfg);
  const Grid4 d4 = central_derivative(s.grid, s.dx);

  Real energy8pi = 0;
  Real max_residual = 0;
  Eigen::VectorXcd flux(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Bispinor psi = s.grid.col(j);
    const Bispinor row_form = beta * psi;  // unconjugated row components

    const Complex term1 = row_form.cwiseProduct(r.col(j)).sum() / cfg.c;
    const Complex term2 =
        -static_cast<Real>(signs.spatial) * row_form.cwiseProduct(W * d4.col(j)).sum();
    const FieldFrame f =
        bispinor_to_field(psi, cfg.spec.axis, cfg.spec.orientation, WaveKind::advanced);
    const Complex term3 = (4 * pi * signs.mass / cfg.c) *
                          current_balance_term(f, 2 * cfg.spec.mass_omega);
    max_residual = std::max(max_residual, std::abs(term1 + term2 + term3));

    energy8pi += std::real(row_form.cwiseProduct(psi).sum());
    flux[j] = -(signs.spatial * cfg.c / (8 * pi)) * row_form.cwiseProduct(W * psi).sum();
  }

  Real flux_div = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index jp1 = (j + 1) % n, jp2 = (j + 2) % n;
    const Eigen::Index jm1 = (j + n - 1) % n, jm2 = (j + n - 2) % n;
    flux_div +=
        std::real(8.0 * (flux[jp1] - flux[jm1]) - (flux[jp2] - flux[jm2])) / (12.0 * s.dx);
  }

  trace.t.push_back(s.t);
  trace.total_energy.push_back(energy8pi * s.dx / (8 * pi));
  trace.total_poynting_flux_divergence.push_back(flux_div * s.dx);
  trace.balance_residual_with_currents.push_back(max_residual);
  trace.probe.push_back(s.grid(0, cfg.probe_cell));
}

}  // namespace

Real dispersion_omega(Real k, Real mass_omega, Real c) { return std::hypot(c * k, mass_omega); }

PlaneWave analytic_plane_wave(Real k, Real mass_omega, Real c, int polarization,
                              const EquationSpec& spec) {
  if (mass_omega < 0) throw InvalidSpec("mass_omega must be non-negative");
  const SystemSigns signs = system_signs(spec);
  const Matrix4& W = dirac_matrix(matrix_family(spec.axis, spec.orientation).working());
  const Matrix4& beta = dirac_matrix(Alpha::alpha4);

  PlaneWave w;
  w.omega = dispersion_omega(k, mass_omega, c);

  const Matrix4 M = -static_cast<Real>(signs.spatial) * c * k * W +
                    static_cast<Real>(signs.mass) * mass_omega * beta;

  if (w.omega == 0) {
    if (polarization < 0 || polarization > 3)
      throw InvalidSpec("polarization out of range for the constant mode");
    w.psi0 = Bispinor::Zero();
    w.psi0[polarization] = 1;
    return w;
  }

  const Matrix4 P = (Matrix4::Identity() + M / w.omega) / 2;
  std::vector<Bispinor> basis;
  for (int col = 0; col < 4 && basis.size() < 2; ++col) {
    Bispinor v = P.col(col);
    for (const auto& b : basis) v -= b * (b.adjoint() * v)(0, 0);
    const Real norm = v.norm();
    if (norm > 1e-6) basis.push_back(v / norm);
  }
  if (polarization < 0 || static_cast<size_t>(polarization) >= basis.size())
    throw InvalidSpec("polarization out of range");
  w.psi0 = basis[static_cast<size_t>(polarization)];

  const Real residual = (M * w.psi0 - w.omega * w.psi0).norm();
  if (residual > 1e-10 * std::max<Real>(1, w.omega))
    throw NoEigenvector("plane-wave amplitude fails the dispersion relation");
  return w;
}

std::vector<Bispinor> plane_wave_grid(const PlaneWave& w, Real k, int n_cells, Real dx) {
  std::vector<Bispinor> cells(static_cast<size_t>(n_cells));
  for (int j = 0; j < n_cells; ++j)
    cells[static_cast<size_t>(j)] = w.psi0 * std::exp(-iu * (k * j * dx));
  return cells;
}

Real resolve_dt(const SimConfig& cfg) {
  validate(cfg);
  if (cfg.dt > 0) return cfg.dt;
  const Real dx = cfg.domain_length / cfg.n_cells;
  return cfg.cfl * dx / cfg.c;
}

SimState initial_state(const SimConfig& cfg) {
  validate(cfg);
  SimState s;
  s.t = 0;
  s.dx = cfg.domain_length / cfg.n_cells;

  std::vector<Bispinor> cells;
  if (cfg.initial.kind == InitialData::Kind::plane_wave) {
    const Real k = 2 * std::numbers::pi * cfg.initial.k_mode / cfg.domain_length;
    const PlaneWave w =
        analytic_plane_wave(k, cfg.spec.mass_omega, cfg.c, cfg.initial.polarization, cfg.spec);
    cells = plane_wave_grid(w, k, cfg.n_cells, s.dx);
    for (auto& psi : cells) psi *= cfg.initial.amplitude;
  } else {
    if (cfg.initial.grid.size() != static_cast<size_t>(cfg.n_cells))
      throw InvalidSpec("custom initial data must provide one bispinor per cell");
    cells = cfg.initial.grid;
  }

  if (cfg.initial.real_fields) {
    for (auto& psi : cells) {
      FieldFrame f = bispinor_to_field(psi, cfg.spec.axis, cfg.spec.orientation);
      f.E = f.E.real().cast<Complex>();
      f.H = f.H.real().cast<Complex>();
      psi = field_to_bispinor(f, cfg.spec.axis, cfg.spec.orientation);
    }
  }

  s.grid.resize(4, cfg.n_cells);
  for (int j = 0; j < cfg.n_cells; ++j) s.grid.col(j) = cells[static_cast<size_t>(j)];
  return s;
}

Grid4 rhs(const SimState& s, const SimConfig& cfg) {
  const SystemSigns signs = system_signs(cfg.spec);
  const Matrix4& W = dirac_matrix(matrix_family(cfg.spec.axis, cfg.spec.orientation).working());
  const Matrix4& beta = dirac_matrix(Alpha::alpha4);

  Grid4 out = static_cast<Real>(signs.spatial) * cfg.c * (W * central_derivative(s.grid, s.dx));
  if (cfg.spec.mass_omega > 0)
    out += (iu * static_cast<Real>(signs.mass) * cfg.spec.mass_omega) * (beta * s.grid);
  return out;
}

void step(SimState& s, const SimConfig& cfg) {
  const Real dt = resolve_dt(cfg);
  if (cfg.c * dt / s.dx > cfg.cfl * (1 + 1e-9))
    throw CflViolation("c*dt/dx exceeds the stability bound");

  SimState tmp = s;
  const Grid4 k1 = rhs(s, cfg);
  tmp.grid = s.grid + (dt / 2) * k1;
  const Grid4 k2 = rhs(tmp, cfg);
  tmp.grid = s.grid + (dt / 2) * k2;
  const Grid4 k3 = rhs(tmp, cfg);
  tmp.grid = s.grid + dt * k3;
  const Grid4 k4 = rhs(tmp, cfg);

  s.grid += (dt / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
  s.t += dt;
}

std::pair<SimState, ConservationTrace> run(const SimConfig& cfg) {
  SimState s = initial_state(cfg);
  ConservationTrace trace;
  record(s, cfg, trace);
  for (int i = 0; i < cfg.n_steps; ++i) {
    step(s, cfg);
    if (!s.grid.allFinite() || s.grid.cwiseAbs().maxCoeff() > 1e12)
      throw NumericalBlowup("field magnitude exceeded 1e12 at t = " + std::to_string(s.t));
    record(s, cfg, trace);
  }
  return {std::move(s), std::move(trace)};
}

Real measure_dispersion(const std::vector<Complex>& probe, Real dt) {
  const int n = static_cast<int>(probe.size());
  if (n < 32 || dt <= 0) throw InsufficientSamples("probe series too short to locate a peak");

  std::vector<std::complex<double>> windowed(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double w = 0.5 * (1 - std::cos(2 * std::numbers::pi * i / n));
    windowed[static_cast<size_t>(i)] = probe[static_cast<size_t>(i)] * w;
  }

  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> spectrum;
  fft.fwd(spectrum, windowed);

  int peak = 0;
  double peak_mag = 0;
  for (int m = 0; m < n; ++m) {
    const double mag = std::abs(spectrum[static_cast<size_t>(m)]);
    if (mag > peak_mag) {
      peak_mag = mag;
      peak = m;
    }
  }
  if (peak_mag == 0) throw InsufficientSamples("probe series is identically zero");

  const double a = std::abs(spectrum[static_cast<size_t>((peak + n - 1) % n)]);
  const double b = peak_mag;
  const double c = std::abs(spectrum[static_cast<size_t>((peak + 1) % n)]);
  double delta = 0;
  if (a > 0 && c > 0) {
    const double la = std::log(a), lb = std::log(b), lc = std::log(c);
    const double denom = la - 2 * lb + lc;
    if (denom != 0) delta = 0.5 * (la - lc) / denom;
    delta = std::clamp(delta, -0.5, 0.5);
  }

  const double signed_bin = (peak > n / 2 ? peak - n : peak) + delta;
  if (std::abs(signed_bin) < 8)
    throw InsufficientSamples("dominant frequency covers fewer than 8 cycles of the window");
  return std::abs(2 * std::numbers::pi * signed_bin / (n * dt));
}

}  // namespace maxdirac
