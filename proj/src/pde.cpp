#include "maxdirac/pde.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "maxdirac/spinor_map.hpp"

namespace maxdirac {

namespace {

constexpr GaussInt kZero{0, 0};
constexpr GaussInt kOne{1, 0};
constexpr GaussInt kI{0, 1};

// Entries of the working matrix (the slot matrix of the propagation axis,
// identical for every family) and of the diagonal mass matrix.
constexpr std::array<std::array<GaussInt, 4>, 4> kWorking{{
    {{kZero, kZero, kZero, GaussInt{0, -1}}},
    {{kZero, kZero, kI, kZero}},
    {{kZero, GaussInt{0, -1}, kZero, kZero}},
    {{kI, kZero, kZero, kZero}},
}};

constexpr std::array<int, 4> kMassDiag{1, 1, -1, -1};

int deriv_rank(Deriv d) {
  switch (d) {
    case Deriv::dt: return 0;
    case Deriv::dx: return 1;
    case Deriv::dy: return 2;
    case Deriv::dz: return 3;
    case Deriv::none: return 4;
  }
  return 5;
}

Deriv axis_deriv(Axis a) {
  switch (a) {
    case Axis::x: return Deriv::dx;
    case Axis::y: return Deriv::dy;
    case Axis::z: return Deriv::dz;
  }
  throw InvalidSpec("unknown axis");
}

void canonicalize(PdeEquation& eq) {
  std::erase_if(eq, [](const PdeTerm& t) { return t.coeff.is_zero(); });
  std::sort(eq.begin(), eq.end(), [](const PdeTerm& a, const PdeTerm& b) {
    const int ra = deriv_rank(a.deriv), rb = deriv_rank(b.deriv);
    if (ra != rb) return ra < rb;
    return static_cast<int>(a.field) < static_cast<int>(b.field);
  });
}

std::string coeff_magnitude(GaussInt g, bool* negative) {
  *negative = g.re < 0 || (g.re == 0 && g.im < 0);
  if (*negative) g = -g;
  if (g == kOne) return "";
  if (g == kI) return "i";
  std::ostringstream os;
  os << "(" << g.re << (g.im >= 0 ? "+" : "-") << std::abs(g.im) << "i)";
  return os.str();
}

const char* unit_prefix(Deriv d) {
  switch (d) {
    case Deriv::dt: return "(1/c)·∂t ";
    case Deriv::dx: return "∂x ";
    case Deriv::dy: return "∂y ";
    case Deriv::dz: return "∂z ";
    case Deriv::none: return "(ω/c)·";
  }
  return "";
}

}  // namespace

GaussInt div_unit(GaussInt a, GaussInt unit) {
  if (!unit.is_unit()) throw InvalidSpec("normalization coefficient is not a unit");
  // 1/unit equals the conjugate when |unit| = 1.
  return a * unit.conj();
}

PdeSystem expand(const EquationSpec& spec) {
  if (spec.mass_omega < 0) throw InvalidSpec("mass_omega must be non-negative");

  const int sigma = spec.time_sign == TimeSign::plus_i ? 1 : -1;
  const int s_p = spec.energy_sign == EnergySign::minus ? 1 : -1;
  const int s_m = s_p;
  const bool row_side = spec.side == Side::row;
  const bool massive = spec.mass_omega > 0;

  const auto [axis_a, axis_b] = transverse_axes(spec.axis, spec.orientation);
  const std::array<Field, 4> field_of{
      static_cast<Field>(static_cast<int>(Field::E_x) + axis_index(axis_a)),
      static_cast<Field>(static_cast<int>(Field::E_x) + axis_index(axis_b)),
      static_cast<Field>(static_cast<int>(Field::H_x) + axis_index(axis_a)),
      static_cast<Field>(static_cast<int>(Field::H_x) + axis_index(axis_b)),
  };

  // Factor carried by each bispinor component relative to its field symbol.
  std::array<GaussInt, 4> factor{kOne, kOne, kI, kI};
  if (spec.kind == WaveKind::retarded) {
    factor[1] = -factor[1];
    factor[3] = -factor[3];
  }
  if (row_side) {
    for (auto& f : factor) f = f.conj();  // conjugated components
  }

  const GaussInt spatial_sign{-s_p, 0};
  // Mass-term phase: -i*sigma*s_m on the column side, +i*sigma*s_m on the row
  // side (conjugating the operator flips the relative phase of the term
  // without a derivative).
  const GaussInt mass_phase{0, row_side ? sigma * s_m : -sigma * s_m};
  const Deriv du = axis_deriv(spec.axis);

  PdeSystem sys;
  sys.axis = spec.axis;
  for (int k = 0; k < 4; ++k) {
    PdeEquation eq;
    eq.push_back({factor[k], field_of[k], Deriv::dt});
    for (int j = 0; j < 4; ++j) {
      const GaussInt w = row_side ? kWorking[j][k] : kWorking[k][j];
      if (w.is_zero()) continue;
      eq.push_back({spatial_sign * w * factor[j], field_of[j], du});
    }
    if (massive) {
      const GaussInt m = mass_phase * GaussInt{kMassDiag[k], 0} * factor[k];
      eq.push_back({m, field_of[k], Deriv::none});
    }
    const GaussInt unit = factor[k];
    for (auto& t : eq) t.coeff = div_unit(t.coeff, unit);
    canonicalize(eq);
    sys.equations[k] = std::move(eq);
  }
  return sys;
}

PdeSystem flip_mass_signs(PdeSystem sys) {
  for (auto& eq : sys.equations)
    for (auto& t : eq)
      if (t.deriv == Deriv::none) t.coeff = -t.coeff;
  return sys;
}

PdeSystem flip_spatial_signs(PdeSystem sys) {
  for (auto& eq : sys.equations)
    for (auto& t : eq)
      if (t.deriv == Deriv::dx || t.deriv == Deriv::dy || t.deriv == Deriv::dz)
        t.coeff = -t.coeff;
  return sys;
}

std::pair<PdeSystem, PdeSystem> factor_wave_equation() {
  EquationSpec left;  // row-side factor: time part minus space part
  left.energy_sign = EnergySign::plus;
  left.side = Side::row;
  left.mass_omega = 0.0;
  EquationSpec right;  // column-side factor: time part plus space part
  right.energy_sign = EnergySign::minus;
  right.side = Side::column;
  right.mass_omega = 0.0;
  return {expand(left), expand(right)};
}

namespace {

std::string coeff_str(GaussInt g) {
  std::ostringstream os;
  os << g.re << (g.im >= 0 ? "+" : "-") << std::abs(g.im) << "i";
  return os.str();
}

void diff_equations(int index, const PdeEquation& a, const PdeEquation& b,
                    std::vector<std::string>& out) {
  auto find = [](const PdeEquation& eq, Field f, Deriv d) -> const PdeTerm* {
    for (const auto& t : eq)
      if (t.field == f && t.deriv == d) return &t;
    return nullptr;
  };
  for (const auto& t : a) {
    const PdeTerm* other = find(b, t.field, t.deriv);
    std::ostringstream os;
    os << "equation " << index + 1 << ", term " << unit_prefix(t.deriv) << to_string(t.field)
       << ": ";
    if (!other) {
      os << "present only on the left (" << coeff_str(t.coeff) << ")";
      out.push_back(os.str());
    } else if (!(other->coeff == t.coeff)) {
      os << coeff_str(t.coeff) << " vs " << coeff_str(other->coeff);
      out.push_back(os.str());
    }
  }
  for (const auto& t : b) {
    if (find(a, t.field, t.deriv)) continue;
    std::ostringstream os;
    os << "equation " << index + 1 << ", term " << unit_prefix(t.deriv) << to_string(t.field)
       << ": present only on the right (" << coeff_str(t.coeff) << ")";
    out.push_back(os.str());
  }
}

}  // namespace

MatchReport systems_match(const PdeSystem& a, const PdeSystem& b, bool allow_current_sign_flip) {
  MatchReport rep;
  if (a == b) {
    rep.status = MatchStatus::exact;
    return rep;
  }
  if (allow_current_sign_flip && a == flip_mass_signs(b)) {
    rep.status = MatchStatus::matched_up_to_current_sign;
    rep.diffs.push_back("all imaginary-current terms carry the opposite sign");
    return rep;
  }
  rep.status = MatchStatus::mismatch;
  if (a.axis != b.axis) rep.diffs.push_back("axis: " + to_string(a.axis) + " vs " + to_string(b.axis));
  for (int k = 0; k < 4; ++k) diff_equations(k, a.equations[k], b.equations[k], rep.diffs);
  if (rep.diffs.empty()) rep.diffs.push_back("systems differ");
  return rep;
}

std::string format_term(const PdeTerm& t, bool leading) {
  bool neg = false;
  const std::string mag = coeff_magnitude(t.coeff, &neg);
  std::string out = leading ? (neg ? "-" : "") : (neg ? " - " : " + ");
  out += mag;
  out += unit_prefix(t.deriv);
  out += to_string(t.field);
  return out;
}

std::string format_equation(const PdeEquation& eq) {
  std::string out;
  for (size_t i = 0; i < eq.size(); ++i) out += format_term(eq[i], i == 0);
  out += " = 0";
  return out;
}

std::string format_system(const PdeSystem& sys) {
  std::string out = "axis " + to_string(sys.axis) + ":\n";
  for (const auto& eq : sys.equations) {
    out += "  ";
    out += format_equation(eq);
    out += "\n";
  }
  return out;
}

}  // namespace maxdirac
