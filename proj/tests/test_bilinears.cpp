#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "maxdirac/algebra.hpp"
#include "maxdirac/bilinears.hpp"
#include "maxdirac/spinor_map.hpp"
#include "oracle_util.hpp"

using namespace maxdirac;

namespace {

FieldFrame frame_eh(double ex, double ey, double ez, double hx, double hy, double hz) {
  FieldFrame f;
  f.E << ex, ey, ez;
  f.H << hx, hy, hz;
  return f;
}

Bispinor random_complex_bispinor(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Bispinor psi;
  for (int i = 0; i < 4; ++i) psi[i] = Complex(u(rng), u(rng));
  return psi;
}

Eigen::Vector3d cross_eh(const FieldFrame& f) {
  Eigen::Vector3d e = f.E.real(), h = f.H.real();
  return e.cross(h);
}

}  // namespace

TEST_CASE("frozen bilinear values for a fixed transverse frame") {
  // E = (3,0,4), H = (1,0,2) propagating along y, negative orientation:
  // psi = (3, 4, i, 2i).
  const FieldFrame f = frame_eh(3, 0, 4, 1, 0, 2);
  const Bispinor psi = field_to_bispinor(f, Axis::y, Orientation::negative);

  CHECK(bilinear(psi, dirac_matrix(Alpha::alpha0)) == Complex(30));  // E*E + H*H
  CHECK(bilinear(psi, dirac_matrix(Alpha::alpha4)) == Complex(20));  // E*E - H*H
  CHECK(bilinear(psi, dirac_matrix(Alpha::alpha5)) == Complex(22));  // 2 E.H
  CHECK(bilinear(psi, dirac_matrix(Alpha::alpha1)) == Complex(0));
  CHECK(bilinear(psi, dirac_matrix(Alpha::alpha2)) == Complex(4));  // -2 [ExH]_y
  CHECK(bilinear(psi, dirac_matrix(Alpha::alpha3)) == Complex(0));

  // Same numbers through the brute-force evaluator and transcribed matrices.
  const oracle::Vec v{psi[0], psi[1], psi[2], psi[3]};
  CHECK(std::abs(oracle::row_m_col(v, oracle::kAlpha4, v) - Complex(20)) < eps_alg);
  CHECK(std::abs(oracle::row_m_col(v, oracle::kAlpha2, v) - Complex(4)) < eps_alg);
}

TEST_CASE("invariant report for the frozen frame") {
  const FieldFrame f = frame_eh(3, 0, 4, 1, 0, 2);
  const InvariantReport rep = invariant_report(f, Axis::y, Orientation::negative);
  const double pi = std::numbers::pi;

  CHECK(std::abs(rep.scalar_I1 - Complex(20 / (8 * pi))) < eps_alg);
  CHECK(std::abs(rep.pseudoscalar_EH - Complex(11)) < eps_alg);
  CHECK(std::abs(rep.energy_density_8piU - Complex(30)) < eps_alg);
  CHECK(std::abs(rep.momentum_row[0]) < eps_alg);
  CHECK(std::abs(rep.momentum_row[1] - Complex(4)) < eps_alg);
  CHECK(std::abs(rep.momentum_row[2]) < eps_alg);
  CHECK(std::abs(rep.poynting[1] - Complex(-1 / (2 * pi))) < eps_alg);
}

TEST_CASE("axis selection: only the propagation slot carries momentum") {
  const FieldFrame f = frame_eh(1, 0, 0, 0, 0, 1);  // along y, negative
  const MatrixFamily fam = matrix_family(Axis::y, Orientation::negative);
  const Bispinor psi = field_to_bispinor(f, Axis::y, Orientation::negative);
  const Vec3c mom = poynting_bilinears(psi, fam);
  CHECK(std::abs(mom[0]) < eps_alg);
  CHECK(std::abs(mom[1] - Complex(2)) < eps_alg);  // -2 [ExH]_y = -2*(-1)
  CHECK(std::abs(mom[2]) < eps_alg);
}

TEST_CASE("bilinear identification against field expressions, all mappings") {
  std::mt19937_64 rng(424242);
  const double tol = 1e-10;
  for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
    for (Orientation o : {Orientation::negative, Orientation::positive}) {
      const double orient_sign = (o == Orientation::negative) ? -2.0 : 2.0;
      for (int trial = 0; trial < 200; ++trial) {
        const FieldFrame f = oracle::random_real_frame(rng, axis);
        const Bispinor psi = field_to_bispinor(f, axis, o);
        const double ee = f.E.real().squaredNorm(), hh = f.H.real().squaredNorm();
        const double eh = f.E.real().dot(f.H.real());

        const Complex b0 = bilinear(psi, dirac_matrix(Alpha::alpha0));
        const Complex b4 = bilinear(psi, dirac_matrix(Alpha::alpha4));
        const Complex b5 = bilinear(psi, dirac_matrix(Alpha::alpha5));
        CHECK(std::abs(b0 - Complex(ee + hh)) <= tol * std::max(1.0, ee + hh));
        CHECK(std::abs(b4 - Complex(ee - hh)) <= tol * std::max(1.0, std::abs(ee - hh)));
        CHECK(std::abs(b5 - Complex(2 * eh)) <= tol * std::max(1.0, std::abs(2 * eh)));

        const MatrixFamily fam = matrix_family(axis, o);
        const Vec3c mom = poynting_bilinears(psi, fam);
        const double sel = cross_eh(f)[axis_index(axis)];
        for (int comp = 0; comp < 3; ++comp) {
          const double expect = (comp == axis_index(axis)) ? orient_sign * sel : 0.0;
          CHECK(std::abs(mom[comp] - Complex(expect)) <= tol * std::max(1.0, std::abs(expect)));
        }
      }
    }
  }
}

TEST_CASE("bilinears of hermitian matrices are real on arbitrary bispinors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Bispinor psi = random_complex_bispinor(rng);
    for (Alpha a :
         {Alpha::alpha0, Alpha::alpha1, Alpha::alpha2, Alpha::alpha3, Alpha::alpha4, Alpha::alpha5}) {
      CHECK(std::abs(std::imag(bilinear(psi, dirac_matrix(a)))) < eps_alg);
    }
  }
}

TEST_CASE("bilinears are invariant under the basis change S") {
  std::mt19937_64 rng(99);
  const Matrix4 S = unitary_S();
  for (int trial = 0; trial < 100; ++trial) {
    const Bispinor psi_p = random_complex_bispinor(rng);
    const Bispinor psi = S * psi_p;
    for (Alpha a :
         {Alpha::alpha0, Alpha::alpha1, Alpha::alpha2, Alpha::alpha3, Alpha::alpha4, Alpha::alpha5}) {
      const Complex in_standard = bilinear(psi, dirac_matrix(a, Representation::standard));
      const Complex in_primed = bilinear(psi_p, dirac_matrix(a, Representation::primed));
      CHECK(std::abs(in_standard - in_primed) < 1e-12 * std::max(1.0, std::abs(in_standard)));
    }
  }
}

TEST_CASE("quadratic identity: frozen example 900 - 16 = 400 + 484") {
  const FieldFrame f = frame_eh(3, 0, 4, 1, 0, 2);
  const Bispinor psi = field_to_bispinor(f, Axis::y, Orientation::negative);
  const auto [lhs, rhs] = fierz_both_sides(psi);
  CHECK(std::abs(lhs - Complex(884)) < eps_alg);
  CHECK(std::abs(rhs - Complex(884)) < eps_alg);
}

TEST_CASE("quadratic identity holds on mapped frames and on arbitrary bispinors") {
  std::mt19937_64 rng(20260819);
  for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
    for (Orientation o : {Orientation::negative, Orientation::positive}) {
      for (int trial = 0; trial < 100; ++trial) {
        const FieldFrame f = oracle::random_real_frame(rng, axis);
        const auto [lhs, rhs] = fierz_both_sides(field_to_bispinor(f, axis, o));
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
      }
    }
  }
  // The five anticommuting involutions make this a norm identity on all of C^4,
  // not just on bispinors that come from field frames.
  for (int trial = 0; trial < 200; ++trial) {
    const Bispinor psi = random_complex_bispinor(rng);
    const auto [lhs, rhs] = fierz_both_sides(psi);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}
