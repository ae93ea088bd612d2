#include <vortexfront/diagnostics.hpp>

#include <vortexfront/quadrature.hpp>

#include <algorithm>
#include <cmath>

namespace vortexfront {

double x_halfwidth(const WaveField& w, double x_window) {
  return w.kappa() > 0.0 ? x_window / w.kappa() : x_window;
}

std::pair<double, double> mass_fluxes(const WaveField& w, double X) {
  const Params& p = w.params();
  const double e = w.eta(X);
  const double yi = p.h + e;
  const double c0 = p.critical_c() + p.eps - (1.0 - p.h) * e;
  const double c1 = p.critical_c() + p.eps + p.h * e;
  const double Q0 = 0.5 * p.omega0 * (e * e - p.h * p.h) + c0 * yi;
  const double g = 1.0 - p.h;
  const double Q1 = 0.5 * p.omega1() * (g * g - e * e) + c1 * (g - e);
  return {Q0, Q1};
}

std::pair<double, double> mass_fluxes_quadrature(const WaveField& w, double X,
                                                 int panels) {
  const double yi = w.interface_height(X);
  const double Q0 = integrate([&](double Y) { return w.U(X, Y); }, 0.0, yi, panels);
  const double Q1 = integrate([&](double Y) { return w.U(X, Y); }, yi, 1.0, panels);
  return {Q0, Q1};
}

double flow_force(const WaveField& w, double X) {
  const Params& p = w.params();
  const double yi = w.interface_height(X);
  auto integrand = [&](double Y, double omega) {
    const auto [U, V] = w.velocity(X, Y);
    return 0.5 * (V * V - U * U) + omega * Y * U;
  };
  return integrate([&](double Y) { return integrand(Y, p.omega0); }, 0.0, yi, 4) +
         integrate([&](double Y) { return integrand(Y, p.omega1()); }, yi, 1.0, 4);
}

std::pair<double, double> pseudofluxes(const WaveField& w, double x) {
  const double h = w.params().h;
  const auto& kb = w.kernel();
  const double a = w.a_eps(x);
  const double q0 = integrate([&](double y) { return a * kb.u_star(y); }, 0.0, h, 4);
  const double q1 = integrate([&](double y) { return a * kb.u_star(y); }, h, 1.0, 4);
  return {q0, q1};
}

ResidualRecord pde_residuals(const WaveField& w, const GridSpec& grid) {
  const Params& p = w.params();
  ResidualRecord r;
  const double W = x_halfwidth(w, grid.x_window);
  for (int i = 0; i < grid.nx; ++i) {
    const double X = -W + 2.0 * W * i / (grid.nx - 1.0);
    const double yi = w.interface_height(X);

    // Interior residuals per layer, excluding the guard band at the interface.
    for (int j = 0; j < grid.ny; ++j) {
      const double Y = (j + 0.5) / grid.ny;
      if (std::abs(Y - yi) < grid.interface_guard) continue;
      const double div = w.U_X(X, Y) + w.V_Y(X, Y);
      const double omega = Y < yi ? p.omega0 : p.omega1();
      const double vort = w.U_Y(X, Y) - w.V_X(X, Y) - omega;
      r.divergence = std::max(r.divergence, std::abs(div));
      r.vorticity = std::max(r.vorticity, std::abs(vort));
    }

    r.kinematic = std::max(
        r.kinematic, std::abs(w.eta_x(X) * w.U(X, yi) - w.V(X, yi)));
    r.top_wall = std::max(r.top_wall, std::abs(w.V(X, 1.0)));
    r.bottom_wall = std::max(r.bottom_wall, std::abs(w.V(X, 0.0)));
  }
  return r;
}

ConservedDrift conserved_drift(const WaveField& w, const GridSpec& grid) {
  const double W = x_halfwidth(w, grid.x_window);
  const auto [Q0_ref, Q1_ref] = mass_fluxes(w, 0.0);
  const double S_ref = flow_force(w, 0.0);
  ConservedDrift d;
  for (int i = 0; i < grid.nx; ++i) {
    const double X = -W + 2.0 * W * i / (grid.nx - 1.0);
    const auto [Q0, Q1] = mass_fluxes(w, X);
    d.Q0 = std::max(d.Q0, std::abs(Q0 - Q0_ref) / std::max(1e-300, std::abs(Q0_ref)));
    d.Q1 = std::max(d.Q1, std::abs(Q1 - Q1_ref) / std::max(1e-300, std::abs(Q1_ref)));
    d.S = std::max(d.S, std::abs(flow_force(w, X) - S_ref) /
                            std::max(1e-300, std::abs(S_ref)));
  }
  return d;
}

namespace {

// Least-squares slope of log(res) against log(eps).
double fit_slope(const std::vector<double>& eps, const std::vector<double>& res) {
  const int n = static_cast<int>(eps.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double x = std::log(eps[i]), y = std::log(std::max(res[i], 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

ScalingStudy scaling_study(const Params& p, const std::vector<double>& eps_list,
                           const GridSpec& grid) {
  if (eps_list.size() < 3)
    throw std::domain_error("scaling_study: need at least 3 eps values");
  ScalingStudy s;
  s.eps = eps_list;
  std::vector<double> vort, kin, top;
  for (double e : eps_list) {
    Params q = p;
    q.eps = e;
    const ResidualRecord r = pde_residuals(build_wave(q), grid);
    s.residuals.push_back(r);
    vort.push_back(r.vorticity);
    kin.push_back(r.kinematic);
    top.push_back(r.top_wall);
    if (r.divergence >= 1e-12) s.divergence_below_floor = false;
  }
  s.slope_vorticity = fit_slope(eps_list, vort);
  s.slope_kinematic = fit_slope(eps_list, kin);
  s.slope_top_wall = fit_slope(eps_list, top);
  return s;
}

std::string to_string(VorticityProbe::Verdict v) {
  switch (v) {
    case VorticityProbe::Verdict::no_function: return "no-vorticity-function";
    case VorticityProbe::Verdict::exists: return "exists";
    case VorticityProbe::Verdict::indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

// Bisection for psi(0, Y) = target on [a, b]; the bracket is guaranteed by
// the intermediate value theorem in the calling context.
double bisect_psi(const WaveField& w, double a, double b, double target) {
  double fa = w.psi(0.0, a) - target;
  for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = w.psi(0.0, m) - target;
    if ((fa <= 0.0) == (fm <= 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

} // namespace

VorticityProbe vorticity_function_probe(const WaveField& w, int samples,
                                        double delta_ceiling) {
  const Params& p = w.params();
  VorticityProbe probe;

  // Proximity to the background shear, the quantities entering the
  // perturbation bounds. sup|U - U*| is attained at the interface extremes.
  const double eta_max = 3.0 * p.eps / std::max(std::abs(w.theta_value()), kThetaZeroTol);
  const double ustar_sup =
      std::max(std::abs(-p.omega0 * p.h + p.critical_c()),
               std::abs(p.omega1() * (1.0 - p.h) + p.critical_c()));
  probe.delta_measured =
      std::max(p.eps + std::max(p.h, 1.0 - p.h) * eta_max, (1.0 + ustar_sup) * eta_max);
  if (p.eps > 0.0 && probe.delta_measured > delta_ceiling)
    throw std::domain_error(
        "vorticity_function_probe: eps too large for the proximity bounds");

  const double lo = 1.0 - 2.0 * p.h;
  const double hi = 2.0 - 2.0 * p.h;
  const double boundary_tol = 1e-12;
  if (std::abs(p.omega0 - lo) < boundary_tol || std::abs(p.omega0 - hi) < boundary_tol) {
    probe.verdict = VorticityProbe::Verdict::indeterminate;
    probe.note = "omega0 on an excluded boundary case";
    return probe;
  }

  const double yi = w.interface_height(0.0);
  if (p.omega0 < lo || p.omega0 > hi) {
    // Both wall values of Psi(0, .) have one sign while Psi = 0 on the
    // interface: matching values across the layers exist.
    const double psi_bot = w.psi(0.0, 0.0);
    const double psi_top = w.psi(0.0, 1.0);
    const double target =
        p.omega0 < lo ? 0.5 * std::max(psi_bot, psi_top) : 0.5 * std::min(psi_bot, psi_top);
    probe.verdict = VorticityProbe::Verdict::no_function;
    probe.Y0 = bisect_psi(w, 0.0, yi, target);
    probe.Y1 = bisect_psi(w, yi, 1.0, target);
    probe.psi0 = w.psi(0.0, probe.Y0);
    probe.psi1 = w.psi(0.0, probe.Y1);
    probe.has_witness = std::abs(probe.psi0 - probe.psi1) < 1e-6;
    return probe;
  }

  // 1-2h < omega0 < 2-2h: verify Psi < 0 below the interface and Psi > 0
  // above it, which makes gamma(t) = omega0 - H(t) a vorticity function.
  const double W = x_halfwidth(w, 10.0);
  const double guard = 1e-6;
  bool ok = true;
  for (int i = 0; i < samples && ok; ++i) {
    const double X = -W + 2.0 * W * i / (samples - 1.0);
    const double yiX = w.interface_height(X);
    for (int j = 0; j < samples; ++j) {
      const double Y = j / (samples - 1.0);
      if (std::abs(Y - yiX) < guard) continue;
      const double ps = w.psi(X, Y);
      if ((Y < yiX && ps >= 0.0) || (Y > yiX && ps <= 0.0)) {
        ok = false;
        break;
      }
    }
  }
  if (ok) {
    probe.verdict = VorticityProbe::Verdict::exists;
    probe.gamma = "gamma(t) = omega0 - H(t)";
  } else {
    probe.verdict = VorticityProbe::Verdict::indeterminate;
    probe.note = "sign pattern check failed";
  }
  return probe;
}

DiagnosticsReport run_diagnostics(const Params& p, const GridSpec& grid) {
  DiagnosticsReport rep;
  const WaveField w = build_wave(p);

  rep.shear_only = p.eps == 0.0;
  rep.residual_sup = pde_residuals(w, grid);
  rep.conserved = conserved_drift(w, grid);

  const double W = x_halfwidth(w, grid.x_window);
  for (int i = 0; i < grid.nx; ++i) {
    const double x = -W + 2.0 * W * i / (grid.nx - 1.0);
    const auto [q0, q1] = pseudofluxes(w, x);
    rep.q0_max = std::max(rep.q0_max, std::abs(q0));
    rep.q1_max = std::max(rep.q1_max, std::abs(q1));
  }

  if (!rep.shear_only) {
    rep.has_scaling = true;
    rep.scaling = scaling_study(p, {p.eps, 0.5 * p.eps, 0.25 * p.eps}, grid);
  }
  rep.vorticity = vorticity_function_probe(w);
  return rep;
}

} // namespace vortexfront
