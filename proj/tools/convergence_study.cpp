// Measures the integrator's accuracy on known solutions and emits the fixture
// consumed by the simulator tests. The recorded numbers establish the pinned
// tolerances; regenerate with
//   build/tools/convergence_study > tests/fixtures/convergence_study.json
// and review the diff before committing.
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <numbers>

#include "maxdirac/sim.hpp"

using namespace maxdirac;
using json = nlohmann::ordered_json;

namespace {

constexpr Real kTwoPi = 2 * std::numbers::pi;

SimConfig base_config(int n_cells, Real mass_omega, int k_mode) {
  SimConfig cfg;
  cfg.n_cells = n_cells;
  cfg.domain_length = kTwoPi;
  cfg.c = 1.0;
  cfg.cfl = 0.5;
  cfg.spec.mass_omega = mass_omega;
  cfg.initial.k_mode = k_mode;
  cfg.initial.polarization = 0;
  return cfg;
}

Real wavenumber(const SimConfig& cfg) { return kTwoPi * cfg.initial.k_mode / cfg.domain_length; }

/// Integrate for about n_periods of the analytic frequency and return the
/// largest per-component deviation from psi0 * exp(i(omega t - k u)).
Real plane_wave_error(SimConfig cfg, Real n_periods) {
  const Real k = wavenumber(cfg);
  const PlaneWave w = analytic_plane_wave(k, cfg.spec.mass_omega, cfg.c, 0, cfg.spec);
  const Real dt = resolve_dt(cfg);
  cfg.n_steps = static_cast<int>(std::ceil(n_periods * kTwoPi / (w.omega * dt)));
  const auto [state, trace] = run(cfg);

  const Complex iu{0, 1};
  Real err = 0;
  for (int j = 0; j < cfg.n_cells; ++j) {
    const Bispinor exact = w.psi0 * std::exp(iu * (w.omega * state.t - k * j * state.dx));
    err = std::max(err, (state.grid.col(j) - exact).cwiseAbs().maxCoeff());
  }
  return err;
}

/// Fixed grid, shrinking dt: error against a small-dt reference run isolates
/// the time integrator's order.
json dt_refinement() {
  SimConfig cfg = base_config(128, 0.5, 2);
  const Real T = 0.4;
  const auto final_grid = [&](Real dt) {
    cfg.dt = dt;
    cfg.n_steps = static_cast<int>(std::lround(T / dt));
    return run(cfg).first.grid;
  };
  const Grid4 ref = final_grid(0.00125);

  json rows = json::array();
  for (Real dt : {0.02, 0.01, 0.005}) {
    const Real err = (final_grid(dt) - ref).cwiseAbs().maxCoeff();
    rows.push_back({{"dt", dt}, {"error_vs_reference", err}});
  }
  return rows;
}

Real energy_drift(SimConfig cfg, Real n_crossings) {
  cfg.initial.real_fields = true;
  const Real dt = resolve_dt(cfg);
  cfg.n_steps = static_cast<int>(std::ceil(n_crossings * cfg.domain_length / (cfg.c * dt)));
  const auto trace = run(cfg).second;
  const Real e0 = trace.total_energy.front();
  Real drift = 0;
  for (Real e : trace.total_energy) drift = std::max(drift, std::abs(e - e0) / std::abs(e0));
  return drift;
}

json dispersion_rows(json* balance_out) {
  json rows = json::array();
  for (Real ratio : {0.0, 0.5, 1.0, 2.0}) {
    SimConfig cfg = base_config(512, 0.0, 2);
    const Real ck = cfg.c * wavenumber(cfg);
    cfg.spec.mass_omega = ratio * ck;
    const Real omega = dispersion_omega(wavenumber(cfg), cfg.spec.mass_omega, cfg.c);
    const Real dt = resolve_dt(cfg);
    // >= 8 periods of the slowest mode in the sweep
    cfg.n_steps = static_cast<int>(std::ceil(8 * kTwoPi / (ck * dt)));
    const auto trace = run(cfg).second;
    const Real measured = measure_dispersion(trace.probe, dt);
    rows.push_back({{"mass_over_ck", ratio},
                    {"omega", omega},
                    {"measured", measured},
                    {"rel_error", std::abs(measured - omega) / omega}});

    if (ratio == 2.0 && balance_out) {
      Real residual = 0, mean_energy = 0;
      for (Real r : trace.balance_residual_with_currents) residual = std::max(residual, r);
      for (Real e : trace.total_energy) mean_energy += e;
      mean_energy /= static_cast<Real>(trace.total_energy.size());
      *balance_out = {{"mass_omega", cfg.spec.mass_omega},
                      {"max_residual", residual},
                      {"mean_total_energy", mean_energy}};
    }
  }
  return rows;
}

}  // namespace

int main() {
  json out;
  out["generator"] = "convergence_study";
  out["domain"] = {{"length", kTwoPi}, {"c", 1.0}, {"cfl", 0.5}, {"k_mode", 2}};

  json resolution = json::array();
  for (int n : {64, 128, 256, 512}) {
    resolution.push_back(
        {{"n_cells", n}, {"max_cell_error", plane_wave_error(base_config(n, 0.0, 2), 4.0)}});
  }
  out["plane_wave_error_vs_resolution"] = resolution;
  out["dt_refinement"] = dt_refinement();

  out["massless_energy_drift"] = {
      {"n_cells_256", energy_drift(base_config(256, 0.0, 2), 4.0)},
      {"n_cells_512", energy_drift(base_config(512, 0.0, 2), 4.0)}};

  json balance;
  out["dispersion"] = dispersion_rows(&balance);
  out["massive_balance"] = balance;

  out["pinned_bounds"] = {{"plane_wave_max_cell_error_256", 1e-5},
                          {"massless_energy_drift", 1e-8},
                          {"massive_balance_residual", 1e-6},
                          {"dispersion_rel_error", 0.01},
                          {"conjugation_diagram", 1e-8}};

  std::cout << out.dump(2) << "\n";
  return 0;
}
