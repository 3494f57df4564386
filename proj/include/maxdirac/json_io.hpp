#pragma once

#include <json.hpp>

#include "maxdirac/bilinears.hpp"
#include "maxdirac/golden.hpp"
#include "maxdirac/lagrangian.hpp"
#include "maxdirac/pde.hpp"
#include "maxdirac/sim.hpp"
#include "maxdirac/spinor_map.hpp"
#include "maxdirac/types.hpp"

/// JSON encodings. Complex numbers are [re, im] pairs throughout.
namespace maxdirac {

using json = nlohmann::ordered_json;

json to_json(const Complex& z);
Complex complex_from_json(const json& j);

json to_json(const Vec3c& v);
Vec3c vec3c_from_json(const json& j);

json to_json(const FieldFrame& f);
FieldFrame frame_from_json(const json& j);

json to_json(const Bispinor& psi);
Bispinor bispinor_from_json(const json& j);

json to_json(const EquationSpec& s);
EquationSpec spec_from_json(const json& j);

json to_json(const PdeTerm& t);
PdeTerm term_from_json(const json& j);

json to_json(const PdeSystem& s);
PdeSystem system_from_json(const json& j);

json to_json(const MatchReport& r);
json to_json(const InvariantReport& r);

json to_json(const SimConfig& c);
SimConfig sim_config_from_json(const json& j);

json to_json(const NonlinearResult& r);

}  // namespace maxdirac
