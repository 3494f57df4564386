// Acceptance gate: nine numbered checks, one printed line each, nonzero exit
// if any check fails or overruns its time budget.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "maxdirac/algebra.hpp"
#include "maxdirac/bilinears.hpp"
#include "maxdirac/golden.hpp"
#include "maxdirac/lagrangian.hpp"
#include "maxdirac/pde.hpp"
#include "maxdirac/sim.hpp"
#include "maxdirac/spinor_map.hpp"
#include "oracle_util.hpp"

using namespace maxdirac;

namespace {

constexpr Complex iu{0, 1};
constexpr Real kTwoPi = 2 * std::numbers::pi;

int g_failed = 0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

void report(int n, const char* what, const Outcome& o, double limit_s, double secs) {
  const bool ok = o.pass && secs < limit_s;
  std::printf("%s criterion %d: %s (%s) [%.2f s, limit %g s]\n", ok ? "PASS" : "FAIL", n, what,
              o.detail.c_str(), secs, limit_s);
  if (!ok) ++g_failed;
}

template <typename F>
void criterion(int n, const char* what, double limit_s, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(n, what, o, limit_s, secs);
}

std::string fmt(const char* pattern, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
  return buf;
}

Real max_abs(const Matrix4& m) { return m.cwiseAbs().maxCoeff(); }

// ---------------------------------------------------------------------------

Outcome c1_algebra() {
  Real dev = 0;
  const Matrix4 I = Matrix4::Identity();
  const Alpha anticommuting[] = {Alpha::alpha1, Alpha::alpha2, Alpha::alpha3, Alpha::alpha4,
                                 Alpha::alpha5};
  for (Representation rep : {Representation::standard, Representation::primed}) {
    dev = std::max(dev, max_abs(dirac_matrix(Alpha::alpha0, rep) - I));
    for (Alpha a : anticommuting) {
      const Matrix4& ma = dirac_matrix(a, rep);
      dev = std::max(dev, max_abs(ma - ma.adjoint()));
      for (Alpha b : anticommuting) {
        const Matrix4 target = (a == b) ? Matrix4(2 * I) : Matrix4(Matrix4::Zero());
        dev = std::max(dev, max_abs(anticommutator(ma, dirac_matrix(b, rep)) - target));
      }
    }
  }
  return {dev < 1e-12, fmt("max deviation %.2e vs 1e-12", dev)};
}

Outcome c2_representation() {
  const Matrix4& S = unitary_S();
  const Matrix4 I = Matrix4::Identity();
  const Real unit = std::max(max_abs(S.adjoint() * S - I), max_abs(S * S.adjoint() - I));
  Real mapped = 0;
  for (int a = 0; a < 6; ++a) {
    const Matrix4 back = conjugate_by(S, dirac_matrix(static_cast<Alpha>(a), Representation::primed));
    mapped = std::max(mapped, max_abs(back - dirac_matrix(static_cast<Alpha>(a))));
  }
  return {unit < 1e-12 && mapped < 1e-12,
          fmt("unitarity %.2e, primed-to-standard conjugation %.2e, vs 1e-12", unit, mapped)};
}

Outcome c3_expansion() {
  const GoldenCatalog& cat = default_catalog();
  bool ok = cat.systems.size() == 6;
  int exact = 0;
  bool conjugated_route = false;
  for (const auto& p : cat.provenance) {
    const MatchReport rep = systems_match(expand(p.spec), cat.system(p.name));
    if (rep.status == MatchStatus::exact) ++exact;
    ok = ok && rep.status == MatchStatus::exact;
    if (p.spec.kind == WaveKind::retarded && p.spec.energy_sign == EnergySign::plus &&
        p.name == ReferenceName::eq2_9 && rep.status == MatchStatus::exact)
      conjugated_route = true;
  }

  bool duality = true;
  for (EnergySign e : {EnergySign::minus, EnergySign::plus}) {
    for (Axis a : {Axis::x, Axis::y, Axis::z}) {
      for (Orientation o : {Orientation::negative, Orientation::positive}) {
        EquationSpec spec;
        spec.energy_sign = e;
        spec.axis = a;
        spec.orientation = o;
        spec.mass_omega = 1.0;
        spec.side = Side::column;
        const PdeSystem col = expand(spec);
        spec.side = Side::row;
        duality = duality && (expand(spec) == flip_mass_signs(col));
      }
    }
  }

  std::ostringstream os;
  os << exact << "/" << cat.provenance.size() << " provenance routes exact; row duality "
     << (duality ? "holds" : "BROKEN") << "; conjugated positive-energy route "
     << (conjugated_route ? "lands on the mass-flipped reference" : "MISSING");
  return {ok && duality && conjugated_route, os.str()};
}

Outcome c4_bilinears() {
  std::mt19937_64 rng(20260819);
  Real max_rel = 0;
  int frames = 0;
  for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
    for (Orientation o : {Orientation::negative, Orientation::positive}) {
      const MatrixFamily fam = matrix_family(axis, o);
      const Real slot_sign = (o == Orientation::negative) ? -1.0 : 1.0;
      for (int t = 0; t < 200; ++t, ++frames) {
        const FieldFrame f = oracle::random_real_frame(rng, axis);
        const Bispinor psi = field_to_bispinor(f, axis, o);
        const Eigen::Vector3d E = f.E.real(), H = f.H.real();
        const Real e2 = E.squaredNorm(), h2 = H.squaredNorm();
        const Real scale = std::max(e2 + h2, 1e-6);

        const auto rel = [&](Complex got, Real want) {
          return std::abs(got - Complex(want)) / std::max(std::abs(want), scale);
        };
        max_rel = std::max(max_rel, rel(bilinear(psi, dirac_matrix(Alpha::alpha0)), e2 + h2));
        max_rel = std::max(max_rel, rel(bilinear(psi, dirac_matrix(Alpha::alpha4)), e2 - h2));
        max_rel = std::max(max_rel, rel(bilinear(psi, dirac_matrix(Alpha::alpha5)), 2 * E.dot(H)));

        const Eigen::Vector3d exh = E.cross(H);
        const Vec3c pb = poynting_bilinears(psi, fam);
        for (int j = 0; j < 3; ++j) {
          const Real want = (j == axis_index(axis)) ? slot_sign * 2 * exh[axis_index(axis)] : 0.0;
          max_rel = std::max(max_rel, rel(pb[j], want));
        }
      }
    }
  }
  std::ostringstream os;
  os << frames << " seeded frames, max relative deviation " << fmt("%.2e vs 1e-10", max_rel);
  return {frames >= 1000 && max_rel < 1e-10, os.str()};
}

Outcome c5_fierz() {
  std::mt19937_64 rng(5150);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const SelfActionParams p = SelfActionParams::from_zeta_rs(1.0, 1.0);
  const Bispinor zero = Bispinor::Zero();
  Real max_rel = 0;

  const auto check = [&](const Bispinor& psi) {
    const auto [lhs, rhs] = fierz_both_sides(psi);
    max_rel = std::max(max_rel, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    const NonlinearLagrangian L =
        nonlinear_lagrangian(psi, zero, zero, Axis::y, Orientation::negative, p);
    max_rel = std::max(max_rel, std::abs(L.quartic - L.quartic_fierz_form) /
                                    std::max(1.0, std::abs(L.quartic)));
  };

  int n = 0;
  for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
    for (Orientation o : {Orientation::negative, Orientation::positive}) {
      for (int t = 0; t < 200; ++t, ++n) {
        check(field_to_bispinor(oracle::random_real_frame(rng, axis), axis, o));
      }
    }
  }
  for (int t = 0; t < 500; ++t, ++n) {
    Bispinor psi;
    for (int i = 0; i < 4; ++i) psi[i] = Complex(u(rng), u(rng));
    check(psi);
  }
  std::ostringstream os;
  os << n << " bispinors (mapped frames and generic), max relative deviation "
     << fmt("%.2e vs 1e-9", max_rel);
  return {max_rel < 1e-9, os.str()};
}

SimConfig accept_config(int n_cells, Real mass_omega) {
  SimConfig cfg;
  cfg.n_cells = n_cells;
  cfg.domain_length = kTwoPi;
  cfg.c = 1.0;
  cfg.cfl = 0.5;
  cfg.spec.mass_omega = mass_omega;
  cfg.initial.k_mode = 2;
  return cfg;
}

Outcome c6_dispersion() {
  Real max_rel = 0, balance = 0;
  for (Real ratio : {0.0, 0.5, 1.0, 2.0}) {
    SimConfig cfg = accept_config(512, ratio * 2.0);  // ck = 2
    const Real k = kTwoPi * cfg.initial.k_mode / cfg.domain_length;
    const Real omega = dispersion_omega(k, cfg.spec.mass_omega, cfg.c);
    const Real dt = resolve_dt(cfg);
    cfg.n_steps = static_cast<int>(std::ceil(8 * kTwoPi / (2.0 * dt)));
    const auto trace = run(cfg).second;
    const Real measured = measure_dispersion(trace.probe, dt);
    max_rel = std::max(max_rel, std::abs(measured - omega) / omega);
    if (ratio == 2.0)
      for (Real r : trace.balance_residual_with_currents) balance = std::max(balance, r);
  }

  SimConfig drift_cfg = accept_config(512, 0.0);
  drift_cfg.initial.real_fields = true;
  drift_cfg.n_steps =
      static_cast<int>(std::ceil(4 * drift_cfg.domain_length / resolve_dt(drift_cfg)));
  const auto trace = run(drift_cfg).second;
  const Real e0 = trace.total_energy.front();
  Real drift = 0;
  for (Real e : trace.total_energy) drift = std::max(drift, std::abs(e - e0) / e0);

  return {max_rel < 0.01 && drift < 1e-8 && balance < 1e-6,
          fmt("dispersion %.2e vs 1e-2; drift %.2e vs 1e-8; balance %.2e vs 1e-6 "
              "(unit amplitude)",
              max_rel, drift, balance)};
}

Outcome c7_lagrangian_nullity() {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  Real worst = 0;
  for (EnergySign e : {EnergySign::minus, EnergySign::plus}) {
    for (Side s : {Side::column, Side::row}) {
      for (Real k : {1.3, -0.8}) {
        for (Real m : {0.0, 0.9}) {
          for (int pol : {0, 1}) {
            EquationSpec spec;
            spec.energy_sign = e;
            spec.side = s;
            spec.mass_omega = m;
            const PlaneWave w = analytic_plane_wave(k, m, 1.0, pol, spec);
            for (int t = 0; t < 5; ++t) {
              const Complex phase = std::exp(iu * (w.omega * u(rng) - k * u(rng)));
              const Bispinor psi = w.psi0 * phase;
              worst = std::max(worst, std::abs(lagrangian_dirac(psi, iu * w.omega * psi,
                                                                -iu * k * psi, m, spec)));
            }
          }
        }
      }
    }
  }
  return {worst < 1e-10, fmt("max |density| %.2e vs 1e-10 over 160 sampled waves", worst)};
}

Outcome c8_nonlinear() {
  const SelfActionParams p = SelfActionParams::from_zeta_rs(2.0, 1.0);
  const Real omega = 2.0, k = 1.0;
  const NonlinearResult res = solve_self_consistent_amplitude(omega, k, p);
  const Real eps_rel = std::abs(res.eps_s - omega) / omega;
  const bool converged = res.status == NonlinearResult::Status::converged && eps_rel < 1e-8;

  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const Matrix4& a2 = dirac_matrix(Alpha::alpha2);
  Real cubic_dev = 0;
  for (int t = 0; t < 5; ++t) {
    Bispinor psi;
    for (int i = 0; i < 4; ++i) psi[i] = Complex(u(rng), u(rng));
    const auto linear = [&](const Bispinor& v) -> Bispinor {
      return omega * v + p.c * k * (a2 * v);
    };
    const Bispinor n1 = linear(psi) - nonlinear_residual(psi, k, omega, p);
    const Bispinor n2 = linear(Bispinor(2 * psi)) - nonlinear_residual(2 * psi, k, omega, p);
    cubic_dev = std::max(cubic_dev, (n2 - 8 * n1).cwiseAbs().maxCoeff());
  }
  return {converged && cubic_dev < 1e-10,
          fmt("self-energy matches the frequency to %.2e vs 1e-8; cubic-scaling deviation "
              "%.2e vs 1e-10",
              eps_rel, cubic_dev)};
}

Outcome c9_mutation() {
  const GoldenCatalog& cat = default_catalog();
  int total = 0, caught = 0;
  for (ReferenceName name : all_reference_names()) {
    const PdeSystem expanded = expand(cat.spec_for(name));
    const PdeSystem& golden = cat.system(name);
    for (int eq = 0; eq < 4; ++eq) {
      for (size_t t = 0; t < golden.equations[static_cast<size_t>(eq)].size(); ++t) {
        PdeSystem mutated = golden;
        auto& coeff = mutated.equations[static_cast<size_t>(eq)][t].coeff;
        coeff = -coeff;
        ++total;
        const MatchReport rep = systems_match(expanded, mutated);
        const std::string tag = "equation " + std::to_string(eq + 1);
        const bool localized = rep.status == MatchStatus::mismatch && rep.diffs.size() == 1 &&
                               rep.diffs[0].find(tag) != std::string::npos;
        if (localized) ++caught;
      }
    }
  }
  std::ostringstream os;
  os << caught << "/" << total << " single-coefficient corruptions caught with a diagnostic "
     << "naming the corrupted equation";
  return {total == 72 && caught == total, os.str()};
}

}  // namespace

int main() {
  criterion(1, "exact matrix algebra in both representations", 1.0, c1_algebra);
  criterion(2, "basis change is unitary and maps the primed set onto the standard set", 1.0,
            c2_representation);
  criterion(3, "expansion reproduces all six reference systems with duality and conjugation",
            1.0, c3_expansion);
  criterion(4, "bilinears identify the field invariants on seeded frames", 2.0, c4_bilinears);
  criterion(5, "quadratic bilinear identity and quartic-form agreement", 2.0, c5_fierz);
  criterion(6, "grid dispersion, energy drift, and current balance", 60.0, c6_dispersion);
  criterion(7, "bilinear Lagrangian density vanishes on plane waves", 1.0, c7_lagrangian_nullity);
  criterion(8, "self-consistent amplitude converges with cubic self-action scaling", 5.0,
            c8_nonlinear);
  criterion(9, "every corrupted reference coefficient is caught and localized", 30.0,
            c9_mutation);

  if (g_failed == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failed);
  return 1;
}
