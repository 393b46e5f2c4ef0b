#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shiftcode/polynomial_map.hpp"
#include "shiftcode/puzzle_tree.hpp"

namespace shiftcode {

/// Map configuration: a polynomial with exact decimal coefficients and the
/// disk U it is restricted to.
///
///   {"coefficients": [["1","0"], ["0","0"], ["-6","0"]],
///    "disk_center": ["0","0"], "disk_radius": "4", "horizon": 20}
///
/// Coefficients are listed leading first.  "auto" as radius selects
/// escape_radius(f) + |center|.  Optional: "depth", "shrink" and
/// "max_shrink_steps" (boundary-contact retries).
struct MapConfig {
  std::vector<DecimalComplex> coefficients;
  DecimalComplex disk_center;
  std::string disk_radius = "auto";
  int horizon = 20;
  std::optional<int> depth;
  double shrink = 0.0;
  int max_shrink_steps = 0;

  PolynomialMap map() const;
  DomainDisk disk(const PolynomialMap& f) const;
};

/// Throws Error(kInvalidInput) on malformed JSON or fields.
MapConfig parse_map_config(const std::string& json_text);
MapConfig load_map_config(const std::string& path);

/// Build policy from the config, with SHIFTCODE_MAX_BOXES and
/// SHIFTCODE_MAX_RESOLUTION environment overrides.
BuildPolicy build_policy(const MapConfig& config);

}  // namespace shiftcode
