// vortexfront: construct and analyse small-amplitude solitary waves riding a
// two-layer constant-vorticity shear flow in a channel.
//
// Subcommands: classify | dispersion | ode | construct | validate | portrait.
// All data files are deterministic for a given config; numbers are written
// with shortest round-trip formatting.

#include <vortexfront/config.hpp>
#include <vortexfront/diagnostics.hpp>
#include <vortexfront/flowfield.hpp>
#include <vortexfront/reduced_ode.hpp>
#include <vortexfront/spectral.hpp>
#include <vortexfront/wave.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace vf = vortexfront;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct Cli {
  vf::RunConfig cfg;
  std::string config_path;
  // Track which flags were set so they override the config file.
  std::optional<double> h, omega0, eps, eps_max, x_window, ode_step, ode_x_max;
  std::optional<int> nx, ny, levels;
};

void apply_overrides(Cli& c) {
  if (!c.config_path.empty()) {
    std::ifstream in(c.config_path);
    if (!in) throw std::domain_error("cannot open config file: " + c.config_path);
    json j = json::parse(in);
    c.cfg = vf::run_config_from_json(j);
  }
  if (c.h) c.cfg.params.h = *c.h;
  if (c.omega0) c.cfg.params.omega0 = *c.omega0;
  if (c.eps) c.cfg.params.eps = *c.eps;
  if (c.eps_max) c.cfg.params.eps_max = *c.eps_max;
  if (c.nx) c.cfg.nx = *c.nx;
  if (c.ny) c.cfg.ny = *c.ny;
  if (c.levels) c.cfg.levels = *c.levels;
  if (c.x_window) c.cfg.x_window = *c.x_window;
  if (c.ode_step) c.cfg.ode_step = *c.ode_step;
  if (c.ode_x_max) c.cfg.ode_x_max = *c.ode_x_max;
}

void add_param_flags(CLI::App* app, Cli& c) {
  app->set_help_flag("--help", "print help"); // frees -h/--h for the height flag
  app->add_option("--config", c.config_path, "JSON config file; flags override");
  app->add_option("--h", c.h, "interface height in (0,1)");
  app->add_option("--omega0", c.omega0, "lower-layer vorticity");
  app->add_option("--eps", c.eps, "bifurcation parameter");
  app->add_option("--eps-max", c.eps_max, "validity ceiling for eps");
  app->add_option("--nx", c.nx, "grid stations in X");
  app->add_option("--ny", c.ny, "grid points in Y");
  app->add_option("--x-window", c.x_window, "half-width in units of 1/kappa");
}

void write_metadata(const std::string& out_path, const vf::RunConfig& cfg) {
  json meta;
  meta["tool"] = "vortexfront";
  meta["version"] = kVersion;
  meta["config"] = vf::to_json(cfg);
  std::ofstream out(out_path + ".meta.json");
  out << meta.dump(2) << "\n";
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  return out;
}

void emit_error(const std::string& code, const std::string& message) {
  json j;
  j["error"] = {{"code", code}, {"message", message}};
  std::cout << j.dump(2) << "\n";
}

int cmd_classify(const vf::RunConfig& cfg) {
  cfg.params.validate();
  const double th = vf::theta(cfg.params);
  const vf::RegionLabel label = vf::classify_region(cfg.params);

  json j = vf::to_json(label);
  j["theta"] = th;
  j["c_star"] = cfg.params.critical_c();
  json roots = json::array();
  for (const auto& r : vf::equilibrium_interfaces(cfg.params))
    roots.push_back({{"eta", r.eta}, {"multiplicity", r.multiplicity}});
  j["equilibria"] = roots;

  if (label.region == vf::Region::degenerate_theta_zero) {
    j["error"] = {{"code", "THETA_ZERO"},
                  {"message", "theta = 0: no solitary wave is constructed"}};
    std::cout << j.dump(2) << "\n";
    return kExitValidation;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_dispersion(const vf::RunConfig& cfg, double kmin, double kmax, int nk,
                   const std::string& out_path) {
  cfg.params.validate();
  auto out = open_out(out_path);
  out << "k,d\n";
  for (const auto& [k, d] : vf::dispersion_samples(cfg.params.h, kmin, kmax, nk))
    out << vf::format_double(k) << "," << vf::format_double(d) << "\n";
  write_metadata(out_path, cfg);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int cmd_ode(const vf::RunConfig& cfg, double a0, double b0, const std::string& out_path) {
  const vf::ReducedTrajectory traj =
      vf::integrate_reduced(a0, b0, cfg.ode_x_max, cfg.ode_step);
  if (traj.diverged) {
    emit_error("DIVERGED", "trajectory escaped |a| > 1e3");
    return kExitNumerical;
  }

  const bool unscaled = cfg.params.eps > 0.0 &&
                        std::abs(vf::theta(cfg.params)) >= vf::kThetaZeroTol;
  auto out = open_out(out_path);
  if (unscaled) {
    const vf::UnscaledTrajectory u = vf::unscale(traj, cfg.params);
    out << "x_tilde,a_tilde,b_tilde,x,a,b\n";
    for (std::size_t i = 0; i < traj.samples.size(); ++i) {
      const auto& s = traj.samples[i];
      const auto& t = u.samples[i];
      out << vf::format_double(s.x_tilde) << "," << vf::format_double(s.a_tilde) << ","
          << vf::format_double(s.b_tilde) << "," << vf::format_double(t.x) << ","
          << vf::format_double(t.a) << "," << vf::format_double(t.b) << "\n";
    }
  } else {
    out << "x_tilde,a_tilde,b_tilde\n";
    for (const auto& s : traj.samples)
      out << vf::format_double(s.x_tilde) << "," << vf::format_double(s.a_tilde) << ","
          << vf::format_double(s.b_tilde) << "\n";
  }
  write_metadata(out_path, cfg);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int cmd_construct(const vf::RunConfig& cfg, const std::string& out_path) {
  const vf::WaveField w = vf::build_wave(cfg.params);
  const double W = vf::x_halfwidth(w, cfg.x_window);
  auto out = open_out(out_path);
  out << "X,Y,U,V,Psi,layer\n";
  for (int i = 0; i < cfg.nx; ++i) {
    const double X = -W + 2.0 * W * i / (cfg.nx - 1.0);
    for (int j = 0; j < cfg.ny; ++j) {
      const double Y = static_cast<double>(j) / (cfg.ny - 1.0);
      const auto [U, V] = w.velocity(X, Y);
      const int layer = w.layer_at(X, Y) == vf::Layer::lower ? 0 : 1;
      out << vf::format_double(X) << "," << vf::format_double(Y) << ","
          << vf::format_double(U) << "," << vf::format_double(V) << ","
          << vf::format_double(w.psi(X, Y)) << "," << layer << "\n";
    }
  }
  write_metadata(out_path, cfg);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int cmd_validate(const vf::RunConfig& cfg, const std::string& out_path) {
  cfg.params.validate();
  const double th = vf::theta(cfg.params);
  if (std::abs(th) < vf::kThetaZeroTol && cfg.params.eps > 0.0) {
    emit_error("THETA_ZERO", "theta = 0: nothing to validate");
    return kExitValidation;
  }

  // Stage failures surface as structured entries; the partial report is
  // still written.
  json errors = json::array();
  auto stage = [&](const char* name, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      errors.push_back({{"stage", name}, {"message", e.what()}});
    }
  };

  const vf::GridSpec grid{cfg.nx, cfg.ny, cfg.x_window, 1e-6};
  vf::DiagnosticsReport rep;
  rep.shear_only = cfg.params.eps == 0.0;
  const vf::WaveField w = vf::build_wave(cfg.params);

  stage("residuals", [&] { rep.residual_sup = vf::pde_residuals(w, grid); });
  stage("conserved", [&] { rep.conserved = vf::conserved_drift(w, grid); });
  stage("pseudoflux", [&] {
    const double W = vf::x_halfwidth(w, grid.x_window);
    for (int i = 0; i < grid.nx; ++i) {
      const double x = -W + 2.0 * W * i / (grid.nx - 1.0);
      const auto [q0, q1] = vf::pseudofluxes(w, x);
      rep.q0_max = std::max(rep.q0_max, std::abs(q0));
      rep.q1_max = std::max(rep.q1_max, std::abs(q1));
    }
  });
  if (!rep.shear_only) {
    stage("scaling", [&] {
      rep.scaling = vf::scaling_study(
          cfg.params, {cfg.params.eps, 0.5 * cfg.params.eps, 0.25 * cfg.params.eps}, grid);
      rep.has_scaling = true;
    });
  }
  stage("vorticity_function", [&] { rep.vorticity = vf::vorticity_function_probe(w); });

  json body = vf::to_json(rep);
  body["theta"] = th;
  if (!errors.empty()) body["errors"] = errors;

  auto out = open_out(out_path);
  out << body.dump(2) << "\n";
  write_metadata(out_path, cfg);
  std::cout << "wrote " << out_path << "\n";
  return errors.empty() ? 0 : kExitNumerical;
}

vf::Params region_preset(const std::string& region) {
  // One representative parameter point per classification row.
  vf::Params p;
  if (region == "i") {
    p.h = 0.5;
    p.omega0 = 0.25;
  } else if (region == "ii") {
    p.h = 0.25;
    p.omega0 = 0.75;
  } else if (region == "iii") {
    p.h = 0.25;
    p.omega0 = 1.0;
  } else if (region == "iv") {
    p.h = 0.75;
    p.omega0 = 0.0;
  } else if (region == "v") {
    p.h = 0.75;
    p.omega0 = 0.25;
  } else if (region == "vi") {
    p.h = 0.5;
    p.omega0 = 0.75;
  } else {
    throw std::domain_error("unknown region preset: " + region);
  }
  return p;
}

int cmd_portrait(const vf::RunConfig& cfg, const std::string& out_path,
                 const std::string& stag_path) {
  const vf::WaveField w = vf::build_wave(cfg.params);
  vf::PortraitOptions opts;
  opts.nx = cfg.nx;
  opts.ny = cfg.ny;
  opts.levels = cfg.levels;
  opts.x_window = cfg.x_window;
  const vf::Portrait por = vf::portrait(w, opts);

  auto out = open_out(out_path);
  out << "curve_id,kind,X,Y,psi\n";
  int next_id = 0;
  for (const auto& c : por.curves) {
    next_id = std::max(next_id, c.id + 1);
    for (const auto& pt : c.points)
      out << c.id << "," << c.kind << "," << vf::format_double(pt.X) << ","
          << vf::format_double(pt.Y) << "," << vf::format_double(pt.psi) << "\n";
  }

  json sj;
  if (por.has_stagnation) {
    sj = vf::to_json(por.stagnation);
    if (por.stagnation.bounded_case) {
      const vf::Streamline attached = vf::attached_streamline(w);
      for (const auto& pt : attached.points)
        out << next_id << ",streamline," << vf::format_double(pt.X) << ","
            << vf::format_double(pt.Y) << "," << vf::format_double(pt.psi) << "\n";
      sj["attached_streamline"] = {
          {"psi", attached.psi_level},
          {"termination", vf::to_string(attached.termination)},
          {"endpoints",
           {{{"X", attached.points.front().X}, {"Y", attached.points.front().Y}},
            {{"X", attached.points.back().X}, {"Y", attached.points.back().Y}}}}};
    }
  } else {
    sj["note"] = "shear flow: no isolated stagnation point";
  }
  auto sout = open_out(stag_path);
  sout << sj.dump(2) << "\n";

  write_metadata(out_path, cfg);
  std::cout << "wrote " << out_path << " and " << stag_path << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-layer constant-vorticity solitary waves in a channel"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  Cli c;

  auto* classify = app.add_subcommand("classify", "parameter-space region and equilibria");
  add_param_flags(classify, c);

  auto* dispersion = app.add_subcommand("dispersion", "emit (k, d(k)) samples as CSV");
  add_param_flags(dispersion, c);
  double kmin = -50.0, kmax = 50.0;
  int nk = 2001;
  std::string disp_out = "dispersion.csv";
  dispersion->add_option("--kmin", kmin, "lower end of the k range");
  dispersion->add_option("--kmax", kmax, "upper end of the k range");
  dispersion->add_option("--nk", nk, "sample count");
  dispersion->add_option("--out", disp_out, "output CSV path");

  auto* ode = app.add_subcommand("ode", "integrate the reduced KdV-type system");
  add_param_flags(ode, c);
  double a0 = -1.5, b0 = 0.0;
  std::string ode_out = "trajectory.csv";
  ode->add_option("--a0", a0, "initial a (default: homoclinic symmetric point)");
  ode->add_option("--b0", b0, "initial b");
  ode->add_option("--step", c.ode_step, "RK4 step");
  ode->add_option("--x-max", c.ode_x_max, "half-range of integration");
  ode->add_option("--out", ode_out, "output CSV path");

  auto* construct = app.add_subcommand("construct", "emit the wave field on a grid");
  add_param_flags(construct, c);
  std::string cons_out = "field.csv";
  construct->add_option("--out", cons_out, "output CSV path");

  auto* validate = app.add_subcommand("validate", "full diagnostics report");
  add_param_flags(validate, c);
  std::string val_out = "diagnostics.json";
  validate->add_option("--out", val_out, "output JSON path");

  auto* portrait = app.add_subcommand("portrait", "streamline portrait and stagnation");
  add_param_flags(portrait, c);
  std::string por_out = "portrait.csv", stag_out = "stagnation.json", region;
  portrait->add_option("--out", por_out, "portrait CSV path");
  portrait->add_option("--stagnation-out", stag_out, "stagnation JSON path");
  portrait->add_option("--region", region, "preset parameters: i, ii, iii, iv, v, vi");
  portrait->add_option("--levels", c.levels, "contour level count");

  CLI11_PARSE(app, argc, argv);

  try {
    apply_overrides(c);
    // Paths from the config's outputs map, unless given on the command line.
    auto path_from_config = [&](const char* key, std::string& target,
                                const std::string& default_name) {
      if (target != default_name) return; // flag given
      auto it = c.cfg.outputs.find(key);
      if (it != c.cfg.outputs.end()) target = it->second;
    };
    path_from_config("dispersion", disp_out, "dispersion.csv");
    path_from_config("trajectory", ode_out, "trajectory.csv");
    path_from_config("field", cons_out, "field.csv");
    path_from_config("diagnostics", val_out, "diagnostics.json");
    path_from_config("portrait", por_out, "portrait.csv");
    path_from_config("stagnation", stag_out, "stagnation.json");
    if (portrait->parsed() && !region.empty()) {
      const vf::Params preset = region_preset(region);
      c.cfg.params.h = preset.h;
      c.cfg.params.omega0 = preset.omega0;
      if (c.h) c.cfg.params.h = *c.h;
      if (c.omega0) c.cfg.params.omega0 = *c.omega0;
    }

    if (classify->parsed()) return cmd_classify(c.cfg);
    if (dispersion->parsed()) return cmd_dispersion(c.cfg, kmin, kmax, nk, disp_out);
    if (ode->parsed()) return cmd_ode(c.cfg, a0, b0, ode_out);
    if (construct->parsed()) return cmd_construct(c.cfg, cons_out);
    if (validate->parsed()) return cmd_validate(c.cfg, val_out);
    if (portrait->parsed()) return cmd_portrait(c.cfg, por_out, stag_out);
  } catch (const std::domain_error& e) {
    emit_error("VALIDATION", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    emit_error("NUMERICAL", e.what());
    return kExitNumerical;
  }
  return 0;
}
