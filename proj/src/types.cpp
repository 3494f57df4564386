#include "maxdirac/types.hpp"

namespace maxdirac {

namespace {

[[noreturn]] void bad_value(const char* what, const std::string& s) {
  throw InvalidSpec(std::string("unknown ") + what + ": '" + s + "'");
}

}  // namespace

std::string to_string(Axis a) {
  switch (a) {
    case Axis::x: return "x";
    case Axis::y: return "y";
    case Axis::z: return "z";
  }
  return "?";
}

std::string to_string(Orientation o) {
  return o == Orientation::negative ? "negative" : "positive";
}

std::string to_string(WaveKind k) {
  return k == WaveKind::advanced ? "advanced" : "retarded";
}

std::string to_string(Representation r) {
  return r == Representation::standard ? "standard" : "primed";
}

std::string to_string(Alpha a) {
  switch (a) {
    case Alpha::alpha0: return "alpha0";
    case Alpha::alpha1: return "alpha1";
    case Alpha::alpha2: return "alpha2";
    case Alpha::alpha3: return "alpha3";
    case Alpha::alpha4: return "alpha4";
    case Alpha::alpha5: return "alpha5";
  }
  return "?";
}

std::string to_string(EnergySign s) { return s == EnergySign::minus ? "minus" : "plus"; }

std::string to_string(Side s) { return s == Side::column ? "column" : "row"; }

std::string to_string(TimeSign t) { return t == TimeSign::plus_i ? "plus_i" : "minus_i"; }

std::string to_string(Field f) {
  switch (f) {
    case Field::E_x: return "E_x";
    case Field::E_y: return "E_y";
    case Field::E_z: return "E_z";
    case Field::H_x: return "H_x";
    case Field::H_y: return "H_y";
    case Field::H_z: return "H_z";
  }
  return "?";
}

std::string to_string(Deriv d) {
  switch (d) {
    case Deriv::dt: return "dt";
    case Deriv::dx: return "dx";
    case Deriv::dy: return "dy";
    case Deriv::dz: return "dz";
    case Deriv::none: return "none";
  }
  return "?";
}

Axis axis_from_string(const std::string& s) {
  if (s == "x") return Axis::x;
  if (s == "y") return Axis::y;
  if (s == "z") return Axis::z;
  bad_value("axis", s);
}

Orientation orientation_from_string(const std::string& s) {
  if (s == "negative") return Orientation::negative;
  if (s == "positive") return Orientation::positive;
  bad_value("orientation", s);
}

WaveKind kind_from_string(const std::string& s) {
  if (s == "advanced") return WaveKind::advanced;
  if (s == "retarded") return WaveKind::retarded;
  bad_value("kind", s);
}

EnergySign energy_sign_from_string(const std::string& s) {
  if (s == "minus") return EnergySign::minus;
  if (s == "plus") return EnergySign::plus;
  bad_value("energy sign", s);
}

Side side_from_string(const std::string& s) {
  if (s == "column") return Side::column;
  if (s == "row") return Side::row;
  bad_value("side", s);
}

TimeSign time_sign_from_string(const std::string& s) {
  if (s == "plus_i") return TimeSign::plus_i;
  if (s == "minus_i") return TimeSign::minus_i;
  bad_value("time sign", s);
}

Field field_from_string(const std::string& s) {
  if (s == "E_x") return Field::E_x;
  if (s == "E_y") return Field::E_y;
  if (s == "E_z") return Field::E_z;
  if (s == "H_x") return Field::H_x;
  if (s == "H_y") return Field::H_y;
  if (s == "H_z") return Field::H_z;
  bad_value("field", s);
}

Deriv deriv_from_string(const std::string& s) {
  if (s == "dt") return Deriv::dt;
  if (s == "dx") return Deriv::dx;
  if (s == "dy") return Deriv::dy;
  if (s == "dz") return Deriv::dz;
  if (s == "none") return Deriv::none;
  bad_value("deriv", s);
}

}  // namespace maxdirac
