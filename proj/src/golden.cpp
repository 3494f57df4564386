#include "maxdirac/golden.hpp"

#include <cstdlib>
#include <fstream>

#include "maxdirac/json_io.hpp"

#ifndef MAXDIRAC_DATA_FILE
#define MAXDIRAC_DATA_FILE "data/reference_systems.json"
#endif

namespace maxdirac {

namespace {

std::string& data_file_override() {
  static std::string path;
  return path;
}

}  // namespace

std::string to_string(ReferenceName n) {
  switch (n) {
    case ReferenceName::eq2_8: return "eq2_8";
    case ReferenceName::eq2_9: return "eq2_9";
    case ReferenceName::eq2_12: return "eq2_12";
    case ReferenceName::eq3_7_x: return "eq3_7_x";
    case ReferenceName::eq3_7_y: return "eq3_7_y";
    case ReferenceName::eq3_7_z: return "eq3_7_z";
  }
  throw InvalidSpec("unknown reference name");
}

ReferenceName reference_name_from_string(const std::string& s) {
  for (ReferenceName n : all_reference_names())
    if (to_string(n) == s) return n;
  throw InvalidSpec("unknown reference system: " + s);
}

std::vector<ReferenceName> all_reference_names() {
  return {ReferenceName::eq2_8,   ReferenceName::eq2_9,   ReferenceName::eq2_12,
          ReferenceName::eq3_7_x, ReferenceName::eq3_7_y, ReferenceName::eq3_7_z};
}

const PdeSystem& GoldenCatalog::system(ReferenceName n) const {
  auto it = systems.find(n);
  if (it == systems.end()) throw InvalidSpec("catalog has no system " + to_string(n));
  return it->second;
}

const EquationSpec& GoldenCatalog::spec_for(ReferenceName n) const {
  for (const auto& p : provenance)
    if (p.name == n) return p.spec;
  throw InvalidSpec("catalog has no provenance entry for " + to_string(n));
}

GoldenCatalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open data file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error("malformed data file " + path + ": " + e.what());
  }

  GoldenCatalog cat;
  cat.version = j.at("version").get<int>();
  cat.pinned_time_sign = time_sign_from_string(j.at("pinned_time_sign").get<std::string>());
  for (const auto& jp : j.at("provenance")) {
    GoldenCatalog::Provenance p;
    p.name = reference_name_from_string(jp.at("name").get<std::string>());
    p.spec = spec_from_json(jp.at("spec"));
    cat.provenance.push_back(std::move(p));
  }
  for (const auto& [key, jsys] : j.at("systems").items()) {
    cat.systems[reference_name_from_string(key)] = system_from_json(jsys);
  }
  if (cat.systems.size() != all_reference_names().size())
    throw Error("data file " + path + " does not define all reference systems");
  return cat;
}

std::string default_data_file() {
  if (!data_file_override().empty()) return data_file_override();
  if (const char* env = std::getenv("MAXDIRAC_DATA"); env && *env) return env;
  return MAXDIRAC_DATA_FILE;
}

void set_data_file(const std::string& path) { data_file_override() = path; }

const GoldenCatalog& default_catalog() {
  static const GoldenCatalog cat = load_catalog(default_data_file());
  return cat;
}

const PdeSystem& reference_system(ReferenceName n) { return default_catalog().system(n); }

}  // namespace maxdirac
