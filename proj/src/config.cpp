#include <vortexfront/config.hpp>

#include <charconv>
#include <cmath>

namespace vortexfront {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

json to_json(const RunConfig& c) {
  json j;
  j["params"] = {{"h", c.params.h},
                 {"omega0", c.params.omega0},
                 {"eps", c.params.eps},
                 {"eps_max", c.params.eps_max}};
  j["grid"] = {{"nx", c.nx}, {"ny", c.ny}};
  j["x_window"] = c.x_window;
  j["ode"] = {{"step", c.ode_step}, {"x_max", c.ode_x_max}};
  j["levels"] = c.levels;
  j["outputs"] = c.outputs;
  return j;
}

RunConfig run_config_from_json(const json& j) {
  RunConfig c;
  if (j.contains("params")) {
    const auto& p = j.at("params");
    c.params.h = p.value("h", c.params.h);
    c.params.omega0 = p.value("omega0", c.params.omega0);
    c.params.eps = p.value("eps", c.params.eps);
    c.params.eps_max = p.value("eps_max", c.params.eps_max);
  }
  if (j.contains("grid")) {
    c.nx = j.at("grid").value("nx", c.nx);
    c.ny = j.at("grid").value("ny", c.ny);
  }
  c.x_window = j.value("x_window", c.x_window);
  if (j.contains("ode")) {
    c.ode_step = j.at("ode").value("step", c.ode_step);
    c.ode_x_max = j.at("ode").value("x_max", c.ode_x_max);
  }
  c.levels = j.value("levels", c.levels);
  if (j.contains("outputs"))
    c.outputs = j.at("outputs").get<std::map<std::string, std::string>>();
  return c;
}

json to_json(const RegionLabel& label) {
  json j;
  j["region"] = to_string(label.region);
  if (label.region != Region::degenerate_theta_zero) {
    j["wave_profile"] = to_string(label.wave_profile);
    j["stagnation_layer"] = to_string(label.stagnation_layer);
    j["stagnation_nature"] = to_string(label.stagnation_nature);
  }
  return j;
}

json to_json(const DiagnosticsReport& rep) {
  json j;
  j["mode"] = rep.shear_only ? "exact-shear" : "wave";
  j["residuals"] = {{"divergence", rep.residual_sup.divergence},
                    {"vorticity", rep.residual_sup.vorticity},
                    {"kinematic", rep.residual_sup.kinematic},
                    {"top_wall", rep.residual_sup.top_wall},
                    {"bottom_wall", rep.residual_sup.bottom_wall}};
  j["conserved"] = {{"Q0_drift", rep.conserved.Q0},
                    {"Q1_drift", rep.conserved.Q1},
                    {"S_drift", rep.conserved.S}};
  j["pseudoflux"] = {{"q0_max", rep.q0_max}, {"q1_max", rep.q1_max}};
  if (rep.has_scaling) {
    json s;
    s["vorticity"] = rep.scaling.slope_vorticity;
    s["kinematic"] = rep.scaling.slope_kinematic;
    s["top_wall"] = rep.scaling.slope_top_wall;
    s["divergence"] =
        rep.scaling.divergence_below_floor ? json("below-floor") : json(nullptr);
    j["scaling"] = s;
  }
  json vf;
  vf["verdict"] = to_string(rep.vorticity.verdict);
  if (rep.vorticity.has_witness) {
    vf["witness"] = {{"Y0", rep.vorticity.Y0},
                     {"Y1", rep.vorticity.Y1},
                     {"psi0", rep.vorticity.psi0},
                     {"psi1", rep.vorticity.psi1}};
  } else {
    vf["witness"] = nullptr;
  }
  if (!rep.vorticity.gamma.empty()) vf["gamma"] = rep.vorticity.gamma;
  if (!rep.vorticity.note.empty()) vf["note"] = rep.vorticity.note;
  vf["delta_measured"] = rep.vorticity.delta_measured;
  j["vorticity_function"] = vf;
  return j;
}

json to_json(const StagnationReport& rep) {
  json j;
  j["location"] = {{"X", rep.X}, {"Y", rep.Y}};
  j["nature"] = rep.is_centre ? "centre" : "saddle";
  j["layer"] = to_string(rep.layer);
  j["wave_profile"] = to_string(rep.profile);
  j["determinant"] = rep.det;
  j["bounded_critical_layer"] = rep.critical_layer_bounded;
  if (rep.bounded_case) {
    j["boundary_saddles"] = {{{"X", -rep.X_star}, {"Y", rep.wall_Y}},
                             {{"X", rep.X_star}, {"Y", rep.wall_Y}}};
  } else {
    j["boundary_saddles"] = json::array();
  }
  j["interior_cluster_count"] = rep.interior_cluster_count;
  j["wall_cluster_count"] = rep.wall_cluster_count;
  return j;
}

} // namespace vortexfront
