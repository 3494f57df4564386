#include "maxdirac/algebra.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace maxdirac {

namespace {

constexpr Complex o{0, 0};
constexpr Complex p{1, 0};
constexpr Complex n{-1, 0};
constexpr Complex pi_{0, 1};
constexpr Complex ni{0, -1};

Matrix4 make(std::initializer_list<Complex> entries) {
  Matrix4 m;
  int k = 0;
  for (Complex z : entries) m(k / 4, k % 4) = z, ++k;
  return m;
}

const Matrix4& standard_matrix(Alpha a) {
  static const Matrix4 a0 = Matrix4::Identity();
  static const Matrix4 a1 = make({o, o, o, p,
                                  o, o, p, o,
                                  o, p, o, o,
                                  p, o, o, o});
  static const Matrix4 a2 = make({o, o, o, ni,
                                  o, o, pi_, o,
                                  o, ni, o, o,
                                  pi_, o, o, o});
  static const Matrix4 a3 = make({o, o, p, o,
                                  o, o, o, n,
                                  p, o, o, o,
                                  o, n, o, o});
  static const Matrix4 a4 = make({p, o, o, o,
                                  o, p, o, o,
                                  o, o, n, o,
                                  o, o, o, n});
  static const Matrix4 a5 = Matrix4(a1 * a2 * a3 * a4);
  switch (a) {
    case Alpha::alpha0: return a0;
    case Alpha::alpha1: return a1;
    case Alpha::alpha2: return a2;
    case Alpha::alpha3: return a3;
    case Alpha::alpha4: return a4;
    case Alpha::alpha5: return a5;
  }
  throw InvalidSpec("bad matrix label");
}

const Matrix4& primed_matrix(Alpha a) {
  static const Matrix4 a0 = Matrix4::Identity();
  static const Matrix4 a1 = make({o, p, o, o,
                                  p, o, o, o,
                                  o, o, o, p,
                                  o, o, p, o});
  static const Matrix4 a2 = make({o, ni, o, o,
                                  pi_, o, o, o,
                                  o, o, o, pi_,
                                  o, o, ni, o});
  static const Matrix4 a3 = make({p, o, o, o,
                                  o, n, o, o,
                                  o, o, p, o,
                                  o, o, o, n});
  static const Matrix4 a4 = make({o, o, o, n,
                                  o, o, p, o,
                                  o, p, o, o,
                                  n, o, o, o});
  static const Matrix4 a5 = Matrix4(a1 * a2 * a3 * a4);
  switch (a) {
    case Alpha::alpha0: return a0;
    case Alpha::alpha1: return a1;
    case Alpha::alpha2: return a2;
    case Alpha::alpha3: return a3;
    case Alpha::alpha4: return a4;
    case Alpha::alpha5: return a5;
  }
  throw InvalidSpec("bad matrix label");
}

}  // namespace

const Matrix4& dirac_matrix(Alpha a, Representation rep) {
  return rep == Representation::standard ? standard_matrix(a) : primed_matrix(a);
}

Matrix4 anticommutator(const Matrix4& a, const Matrix4& b) { return a * b + b * a; }

bool is_hermitian(const Matrix4& m, Real eps) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= eps;
}

bool is_unitary(const Matrix4& m, Real eps) {
  return (m * m.adjoint() - Matrix4::Identity()).cwiseAbs().maxCoeff() <= eps;
}

const Matrix4& unitary_S() {
  static const Matrix4 S = [] {
    const Real r = 1.0 / std::sqrt(2.0);
    Matrix4 m = make({p, o, o, n,
                      o, p, p, o,
                      p, o, o, p,
                      o, p, n, o});
    return Matrix4(r * m);
  }();
  return S;
}

Matrix4 conjugate_by(const Matrix4& u, const Matrix4& m, Real eps) {
  if (!is_unitary(u, eps)) throw NotUnitary("conjugate_by: matrix is not unitary");
  return u * m * u.adjoint();
}

MatrixFamily matrix_family(Axis axis, Orientation orientation) {
  MatrixFamily fam{axis, orientation, {}};
  switch (axis) {
    case Axis::y: fam.slot = {Alpha::alpha1, Alpha::alpha2, Alpha::alpha3}; break;
    case Axis::x: fam.slot = {Alpha::alpha2, Alpha::alpha3, Alpha::alpha1}; break;
    case Axis::z: fam.slot = {Alpha::alpha3, Alpha::alpha1, Alpha::alpha2}; break;
  }
  return fam;
}

namespace {

std::string entry_glyph(const Complex& z) {
  const Real r = 1.0 / std::sqrt(2.0);
  auto near = [](Real a, Real b) { return std::abs(a - b) < eps_alg; };
  if (near(z.imag(), 0)) {
    if (near(z.real(), 0)) return "0";
    if (near(z.real(), 1)) return "1";
    if (near(z.real(), -1)) return "-1";
    if (near(z.real(), r)) return "1/sqrt(2)";
    if (near(z.real(), -r)) return "-1/sqrt(2)";
  }
  if (near(z.real(), 0)) {
    if (near(z.imag(), 1)) return "i";
    if (near(z.imag(), -1)) return "-i";
    if (near(z.imag(), r)) return "i/sqrt(2)";
    if (near(z.imag(), -r)) return "-i/sqrt(2)";
  }
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace

std::string format_matrix(const Matrix4& m) {
  std::vector<std::string> cells(16);
  size_t width = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cells[i * 4 + j] = entry_glyph(m(i, j));
      width = std::max(width, cells[i * 4 + j].size());
    }
  std::ostringstream os;
  for (int i = 0; i < 4; ++i) {
    os << "[ ";
    for (int j = 0; j < 4; ++j) {
      const std::string& cell = cells[i * 4 + j];
      os << std::string(width - cell.size(), ' ') << cell << (j < 3 ? "  " : " ");
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace maxdirac
