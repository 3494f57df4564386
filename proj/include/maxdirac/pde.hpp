#pragma once

#include <array>
#include <string>
#include <vector>

#include "maxdirac/types.hpp"

namespace maxdirac {

/// Exact Gaussian integer a + b*i. The expander works entirely in these; no
/// floating point enters a coefficient.
struct GaussInt {
  long long re = 0;
  long long im = 0;

  friend GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussInt operator*(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(GaussInt a, GaussInt b) { return a.re == b.re && a.im == b.im; }
  GaussInt operator-() const { return {-re, -im}; }
  GaussInt conj() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }
  bool is_unit() const { return (re == 0) != (im == 0) && std::abs(re + im) == 1; }
};

/// Exact division by a Gaussian unit (+-1, +-i). Throws InvalidSpec otherwise.
GaussInt div_unit(GaussInt a, GaussInt unit);

/// One symbolic term. The scale carried by the coefficient is implied by the
/// derivative slot: dt terms carry 1/c, spatial terms are bare, and
/// deriv == none marks the mass term carrying omega/c.
struct PdeTerm {
  GaussInt coeff;
  Field field = Field::E_x;
  Deriv deriv = Deriv::none;

  friend bool operator==(const PdeTerm&, const PdeTerm&) = default;
};

using PdeEquation = std::vector<PdeTerm>;

/// Four component equations, each canonicalized: terms sorted by derivative
/// slot (dt, dx, dy, dz, none) then field, zero coefficients dropped, the dt
/// coefficient normalized to exactly 1 (times the implied 1/c).
struct PdeSystem {
  Axis axis = Axis::y;
  std::array<PdeEquation, 4> equations;

  friend bool operator==(const PdeSystem&, const PdeSystem&) = default;
};

/// Expands one matrix equation into its four component PDEs over the mapped
/// field symbols. Only the sign of mass_omega matters symbolically: 0 drops
/// the mass terms (2-term equations), > 0 keeps them (3-term equations).
PdeSystem expand(const EquationSpec& spec);

/// Negate every mass term / every spatial-derivative term.
PdeSystem flip_mass_signs(PdeSystem s);
PdeSystem flip_spatial_signs(PdeSystem s);

/// The massless second-order wave operator splits into two commuting
/// first-order factors. Returns their expansions for the y-axis mapping:
/// first the left-acting (row-side) factor with the relative minus sign
/// between the time and space parts, then the right-acting (column-side)
/// factor with the relative plus sign. Both systems are massless, so every
/// equation carries exactly two terms, and each equals the source-free
/// field equations for the corresponding propagation direction.
std::pair<PdeSystem, PdeSystem> factor_wave_equation();

enum class MatchStatus { exact, matched_up_to_current_sign, mismatch };

struct MatchReport {
  MatchStatus status = MatchStatus::mismatch;
  /// One line per difference, naming equation index and term.
  std::vector<std::string> diffs;

  bool matched() const { return status != MatchStatus::mismatch; }
};

/// Term-for-term comparison. With allow_current_sign_flip, a system equal to
/// the other after negating every mass term reports matched_up_to_current_sign.
MatchReport systems_match(const PdeSystem& a, const PdeSystem& b,
                          bool allow_current_sign_flip = false);

/// UTF-8 rendering, one equation per line, e.g.
/// "(1/c)·∂t E_x - ∂y H_z + i(ω/c)·E_x = 0".
std::string format_system(const PdeSystem& s);
std::string format_equation(const PdeEquation& eq);
std::string format_term(const PdeTerm& t, bool leading);

}  // namespace maxdirac
