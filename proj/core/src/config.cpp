#include "shiftcode/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "shiftcode/errors.hpp"

namespace shiftcode {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::kInvalidInput, "config: " + what); }

std::string decimal_field(const json& v, const std::string& name) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  bad(name + " must be a decimal string");
}

DecimalComplex complex_field(const json& v, const std::string& name) {
  if (!v.is_array() || v.size() != 2) bad(name + " must be [re, im]");
  return {decimal_field(v[0], name), decimal_field(v[1], name)};
}

int int_field(const json& v, const std::string& name) {
  if (!v.is_number_integer()) bad(name + " must be an integer");
  return v.get<int>();
}

long env_long(const char* name) {
  const char* text = std::getenv(name);
  if (text == nullptr || *text == '\0') return -1;
  char* end = nullptr;
  const long value = std::strtol(text, &end, 10);
  if (*end != '\0' || value <= 0) {
    throw Error(ErrorKind::kInvalidInput, std::string(name) + " must be a positive integer");
  }
  return value;
}

}  // namespace

PolynomialMap MapConfig::map() const { return PolynomialMap::from_decimal(coefficients); }

DomainDisk MapConfig::disk(const PolynomialMap& f) const {
  if (disk_radius != "auto") return DomainDisk::from_decimal(disk_center, disk_radius);
  const Box c = disk_center.enclosure();
  const double shift = rounding::sqrt_up(rounding::add_up(rounding::mul_up(c.re.mag(), c.re.mag()),
                                                          rounding::mul_up(c.im.mag(), c.im.mag())));
  return {c, Interval(rounding::add_up(escape_radius(f), shift))};
}

MapConfig parse_map_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("top level must be an object");
  MapConfig c;
  if (!j.contains("coefficients") || !j["coefficients"].is_array()) bad("missing coefficients");
  for (const auto& v : j["coefficients"]) c.coefficients.push_back(complex_field(v, "coefficient"));
  if (j.contains("disk_center")) c.disk_center = complex_field(j["disk_center"], "disk_center");
  if (j.contains("disk_radius")) c.disk_radius = decimal_field(j["disk_radius"], "disk_radius");
  if (j.contains("horizon")) c.horizon = int_field(j["horizon"], "horizon");
  if (j.contains("depth")) c.depth = int_field(j["depth"], "depth");
  if (j.contains("shrink")) {
    if (!j["shrink"].is_number()) bad("shrink must be a number");
    c.shrink = j["shrink"].get<double>();
  }
  if (j.contains("max_shrink_steps")) c.max_shrink_steps = int_field(j["max_shrink_steps"], "max_shrink_steps");
  if (c.horizon < 1) bad("horizon must be positive");
  if (c.depth && *c.depth < 0) bad("depth must be non-negative");
  if (c.shrink < 0.0 || c.shrink >= 1.0) bad("shrink must be in [0, 1)");
  return c;
}

MapConfig load_map_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidInput, "cannot open config '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_map_config(text.str());
}

BuildPolicy build_policy(const MapConfig& config) {
  BuildPolicy p;
  p.horizon = config.horizon;
  p.radius_shrink = config.shrink;
  p.max_shrink_steps = config.max_shrink_steps;
  if (const long boxes = env_long("SHIFTCODE_MAX_BOXES"); boxes > 0) {
    p.max_boxes_per_level = static_cast<std::size_t>(boxes);
  }
  if (const long res = env_long("SHIFTCODE_MAX_RESOLUTION"); res > 0) {
    p.max_resolution = static_cast<int>(std::min(res, 60L));
  }
  return p;
}

}  // namespace shiftcode
