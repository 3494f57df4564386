#include "maxdirac/json_io.hpp"

namespace maxdirac {

json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidSpec("complex value must be [re, im]");
  return {j[0].get<Real>(), j[1].get<Real>()};
}

json to_json(const Vec3c& v) { return json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])}); }

Vec3c vec3c_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw InvalidSpec("vector must have three components");
  Vec3c v;
  for (int i = 0; i < 3; ++i) v[i] = complex_from_json(j[i]);
  return v;
}

json to_json(const FieldFrame& f) { return json{{"E", to_json(f.E)}, {"H", to_json(f.H)}}; }

FieldFrame frame_from_json(const json& j) {
  FieldFrame f;
  f.E = vec3c_from_json(j.at("E"));
  f.H = vec3c_from_json(j.at("H"));
  return f;
}

json to_json(const Bispinor& psi) {
  json out = json::array();
  for (int i = 0; i < 4; ++i) out.push_back(to_json(psi[i]));
  return out;
}

Bispinor bispinor_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw InvalidSpec("bispinor must have four components");
  Bispinor psi;
  for (int i = 0; i < 4; ++i) psi[i] = complex_from_json(j[i]);
  return psi;
}

json to_json(const EquationSpec& s) {
  return json{{"energy_sign", to_string(s.energy_sign)},
              {"side", to_string(s.side)},
              {"axis", to_string(s.axis)},
              {"orientation", to_string(s.orientation)},
              {"kind", to_string(s.kind)},
              {"mass_omega", s.mass_omega},
              {"time_sign", to_string(s.time_sign)}};
}

EquationSpec spec_from_json(const json& j) {
  EquationSpec s;
  if (j.contains("energy_sign")) s.energy_sign = energy_sign_from_string(j.at("energy_sign"));
  if (j.contains("side")) s.side = side_from_string(j.at("side"));
  if (j.contains("axis")) s.axis = axis_from_string(j.at("axis"));
  if (j.contains("orientation")) s.orientation = orientation_from_string(j.at("orientation"));
  if (j.contains("kind")) s.kind = kind_from_string(j.at("kind"));
  if (j.contains("mass_omega")) s.mass_omega = j.at("mass_omega").get<Real>();
  if (j.contains("time_sign")) s.time_sign = time_sign_from_string(j.at("time_sign"));
  return s;
}

json to_json(const PdeTerm& t) {
  return json{{"coeff", json::array({t.coeff.re, t.coeff.im})},
              {"field", to_string(t.field)},
              {"deriv", to_string(t.deriv)}};
}

PdeTerm term_from_json(const json& j) {
  const json& c = j.at("coeff");
  if (!c.is_array() || c.size() != 2) throw InvalidSpec("term coeff must be [re, im]");
  PdeTerm t;
  t.coeff = GaussInt{c[0].get<long long>(), c[1].get<long long>()};
  t.field = field_from_string(j.at("field"));
  t.deriv = deriv_from_string(j.at("deriv"));
  return t;
}

json to_json(const PdeSystem& s) {
  json eqs = json::array();
  for (const auto& eq : s.equations) {
    json terms = json::array();
    for (const auto& t : eq) terms.push_back(to_json(t));
    eqs.push_back(std::move(terms));
  }
  return json{{"axis", to_string(s.axis)}, {"equations", std::move(eqs)}};
}

PdeSystem system_from_json(const json& j) {
  PdeSystem s;
  s.axis = axis_from_string(j.at("axis"));
  const json& eqs = j.at("equations");
  if (!eqs.is_array() || eqs.size() != 4) throw InvalidSpec("system must have four equations");
  for (int k = 0; k < 4; ++k) {
    PdeEquation eq;
    for (const auto& jt : eqs[k]) eq.push_back(term_from_json(jt));
    s.equations[k] = std::move(eq);
  }
  return s;
}

json to_json(const MatchReport& r) {
  const char* status = r.status == MatchStatus::exact ? "exact"
                       : r.status == MatchStatus::matched_up_to_current_sign
                           ? "matched_up_to_current_sign"
                           : "mismatch";
  return json{{"status", status}, {"matched", r.matched()}, {"diffs", r.diffs}};
}

json to_json(const InvariantReport& r) {
  return json{{"scalar_I1", to_json(r.scalar_I1)},
              {"pseudoscalar_EH", to_json(r.pseudoscalar_EH)},
              {"energy_density_8piU", to_json(r.energy_density_8piU)},
              {"momentum_row", to_json(r.momentum_row)},
              {"poynting", to_json(r.poynting)}};
}

json to_json(const SimConfig& c) {
  json initial{{"kind", c.initial.kind == InitialData::Kind::plane_wave ? "plane_wave" : "custom"},
               {"k_mode", c.initial.k_mode},
               {"amplitude", to_json(c.initial.amplitude)},
               {"polarization", c.initial.polarization},
               {"real_fields", c.initial.real_fields}};
  return json{{"n_cells", c.n_cells},   {"domain_length", c.domain_length},
              {"c", c.c},               {"dt", c.dt},
              {"cfl", c.cfl},           {"n_steps", c.n_steps},
              {"probe_cell", c.probe_cell}, {"spec", to_json(c.spec)},
              {"initial", std::move(initial)}};
}

SimConfig sim_config_from_json(const json& j) {
  SimConfig c;
  if (j.contains("n_cells")) c.n_cells = j.at("n_cells").get<int>();
  if (j.contains("domain_length")) c.domain_length = j.at("domain_length").get<Real>();
  if (j.contains("c")) c.c = j.at("c").get<Real>();
  if (j.contains("dt")) c.dt = j.at("dt").get<Real>();
  if (j.contains("cfl")) c.cfl = j.at("cfl").get<Real>();
  if (j.contains("n_steps")) c.n_steps = j.at("n_steps").get<long long>();
  if (j.contains("probe_cell")) c.probe_cell = j.at("probe_cell").get<int>();
  if (j.contains("spec")) c.spec = spec_from_json(j.at("spec"));
  if (j.contains("initial")) {
    const json& ji = j.at("initial");
    if (ji.contains("kind")) {
      const std::string kind = ji.at("kind").get<std::string>();
      if (kind == "plane_wave")
        c.initial.kind = InitialData::Kind::plane_wave;
      else if (kind == "custom")
        c.initial.kind = InitialData::Kind::custom;
      else
        throw InvalidSpec("unknown initial-data kind: " + kind);
    }
    if (ji.contains("k_mode")) c.initial.k_mode = ji.at("k_mode").get<int>();
    if (ji.contains("amplitude")) {
      const json& ja = ji.at("amplitude");
      c.initial.amplitude = ja.is_array() ? complex_from_json(ja) : Complex(ja.get<Real>());
    }
    if (ji.contains("polarization")) c.initial.polarization = ji.at("polarization").get<int>();
    if (ji.contains("real_fields")) c.initial.real_fields = ji.at("real_fields").get<bool>();
  }
  return c;
}

json to_json(const NonlinearResult& r) {
  const char* status = r.status == NonlinearResult::Status::converged ? "converged"
                       : r.status == NonlinearResult::Status::degenerate_family
                           ? "degenerate_family"
                           : "no_convergence";
  json trace = json::array();
  for (const auto& row : r.trace)
    trace.push_back(json{{"iter", row.iter},
                         {"amplitude_sq", row.amplitude_sq},
                         {"residual_norm", row.residual_norm}});
  return json{{"status", status},
              {"amplitude_sq", r.amplitude_sq},
              {"eps_s", r.eps_s},
              {"omega", r.omega},
              {"psi0", to_json(r.psi0)},
              {"trace", std::move(trace)}};
}

}  // namespace maxdirac
