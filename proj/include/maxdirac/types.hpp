#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace maxdirac {

using Real = double;
using Complex = std::complex<Real>;
using Matrix4 = Eigen::Matrix<Complex, 4, 4>;
using Bispinor = Eigen::Matrix<Complex, 4, 1>;
using RowBispinor = Eigen::Matrix<Complex, 1, 4>;
using Vec3c = Eigen::Matrix<Complex, 3, 1>;
using Grid4 = Eigen::Matrix<Complex, 4, Eigen::Dynamic>;

/// Tolerance for checks that should hold to rounding error.
inline constexpr Real eps_alg = 1e-12;

enum class Axis { x, y, z };
enum class Orientation { negative, positive };
enum class WaveKind { advanced, retarded };
enum class Representation { standard, primed };
enum class Alpha { alpha0, alpha1, alpha2, alpha3, alpha4, alpha5 };
enum class EnergySign { minus, plus };
enum class Side { column, row };
enum class TimeSign { plus_i, minus_i };
enum class Field { E_x, E_y, E_z, H_x, H_y, H_z };
enum class Deriv { dt, dx, dy, dz, none };

inline int axis_index(Axis a) { return static_cast<int>(a); }

/// One first-order matrix equation to expand into component PDEs.
struct EquationSpec {
  EnergySign energy_sign = EnergySign::minus;
  Side side = Side::column;
  Axis axis = Axis::y;
  Orientation orientation = Orientation::negative;
  WaveKind kind = WaveKind::advanced;
  Real mass_omega = 0.0;
  TimeSign time_sign = TimeSign::plus_i;
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotUnitary : Error { using Error::Error; };
struct NotTransverse : Error { using Error::Error; };
struct InvalidSpec : Error { using Error::Error; };
struct CflViolation : Error { using Error::Error; };
struct NumericalBlowup : Error { using Error::Error; };
struct NoEigenvector : Error { using Error::Error; };
struct InsufficientSamples : Error { using Error::Error; };
struct EmptyRegion : Error { using Error::Error; };

std::string to_string(Axis a);
std::string to_string(Orientation o);
std::string to_string(WaveKind k);
std::string to_string(Representation r);
std::string to_string(Alpha a);
std::string to_string(EnergySign s);
std::string to_string(Side s);
std::string to_string(TimeSign t);
std::string to_string(Field f);
std::string to_string(Deriv d);

Axis axis_from_string(const std::string& s);
Orientation orientation_from_string(const std::string& s);
WaveKind kind_from_string(const std::string& s);
EnergySign energy_sign_from_string(const std::string& s);
Side side_from_string(const std::string& s);
TimeSign time_sign_from_string(const std::string& s);
Field field_from_string(const std::string& s);
Deriv deriv_from_string(const std::string& s);

}  // namespace maxdirac
