#pragma once

#include <vortexfront/diagnostics.hpp>
#include <vortexfront/flowfield.hpp>
#include <vortexfront/params.hpp>

#include <json.hpp>

#include <map>
#include <string>

namespace vortexfront {

/// One run's worth of configuration. Everything is deterministic: there is
/// no randomness anywhere in the pipeline, so identical configs produce
/// byte-identical data files.
struct RunConfig {
  Params params;
  int nx = 400;
  int ny = 200;
  double x_window = 10.0;   ///< half-width in units of 1/kappa
  double ode_step = 1e-3;
  double ode_x_max = 20.0;
  int levels = 24;
  std::map<std::string, std::string> outputs; ///< logical name -> path

  bool operator==(const RunConfig&) const = default;
};

nlohmann::json to_json(const RunConfig& c);
RunConfig run_config_from_json(const nlohmann::json& j);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

nlohmann::json to_json(const RegionLabel& label);
nlohmann::json to_json(const DiagnosticsReport& rep);
nlohmann::json to_json(const StagnationReport& rep);

} // namespace vortexfront
