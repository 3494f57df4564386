#pragma once

#include <map>
#include <string>
#include <vector>

#include "maxdirac/pde.hpp"
#include "maxdirac/types.hpp"

namespace maxdirac {

enum class ReferenceName { eq2_8, eq2_9, eq2_12, eq3_7_x, eq3_7_y, eq3_7_z };

std::string to_string(ReferenceName n);
ReferenceName reference_name_from_string(const std::string& s);
std::vector<ReferenceName> all_reference_names();

/// The catalog of reference systems shipped as a versioned data file, plus
/// the pinned operator convention and the equation spec that reproduces each
/// system under it.
struct GoldenCatalog {
  int version = 0;
  TimeSign pinned_time_sign = TimeSign::plus_i;

  struct Provenance {
    ReferenceName name;
    EquationSpec spec;
  };
  std::vector<Provenance> provenance;
  std::map<ReferenceName, PdeSystem> systems;

  const PdeSystem& system(ReferenceName n) const;
  const EquationSpec& spec_for(ReferenceName n) const;
};

/// Parse a catalog data file. Throws Error on malformed content.
GoldenCatalog load_catalog(const std::string& path);

/// Resolve the data file: explicit override via set_data_file(), else the
/// MAXDIRAC_DATA environment variable, else the built-in install path.
std::string default_data_file();
void set_data_file(const std::string& path);

/// Catalog from default_data_file(), loaded once.
const GoldenCatalog& default_catalog();

/// Convenience accessor into default_catalog().
const PdeSystem& reference_system(ReferenceName n);

}  // namespace maxdirac
