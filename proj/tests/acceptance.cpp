// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit status is nonzero when
// any criterion fails.

#include <vortexfront/diagnostics.hpp>
#include <vortexfront/flowfield.hpp>
#include <vortexfront/quadrature.hpp>
#include <vortexfront/reduced_ode.hpp>
#include <vortexfront/spectral.hpp>
#include <vortexfront/wave.hpp>

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace vortexfront;

namespace {

int g_failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] %2d. %s: %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

Params make(double h, double omega0, double eps = 1e-3) {
  Params p;
  p.h = h;
  p.omega0 = omega0;
  p.eps = eps;
  return p;
}

// One representative per classification row.
const std::vector<std::pair<double, double>> kRegionPresets = {
    {0.5, 0.25}, {0.25, 0.75}, {0.25, 1.0}, {0.75, 0.0}, {0.75, 0.25}, {0.5, 0.75}};
const char* kRegionNames[] = {"i", "ii", "iii", "iv", "v", "vi"};

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const int n = static_cast<int>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double x = std::log(xs[i]), y = std::log(std::max(ys[i], 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// 1. KdV homoclinic fidelity.
void criterion_1() {
  const ReducedTrajectory traj = integrate_reduced(-1.5, 0.0, 20.0, 1e-3);
  double sup = 0.0;
  for (const auto& s : traj.samples)
    sup = std::max(sup, std::abs(s.a_tilde + 1.5 / std::pow(std::cosh(0.5 * s.x_tilde), 2)));
  report(1, "KdV homoclinic fidelity", !traj.diverged && sup < 1e-6,
         fmt("sup|a - a0| = %.3e (tol 1e-6)", sup));
}

// 2. Dispersion positivity and branch agreement.
void criterion_2() {
  double min_gap = 1e300, max_branch_diff = 0.0;
  for (double h : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    const double inv_cs = 1.0 / (h * (1.0 - h));
    for (int i = 0; i < 2000; ++i) {
      const double k = -50.0 + 100.0 * (i + 0.5) / 2000.0;
      if (k == 0.0) continue;
      min_gap = std::min(min_gap, dispersion(k, h) - inv_cs);
    }
    for (int i = 0; i <= 60; ++i) {
      const double k = std::pow(10.0, -5.0 + 2.0 * i / 60.0);
      const double closed = k * (1.0 / std::tanh(k * h) + 1.0 / std::tanh(k * (1.0 - h)));
      max_branch_diff = std::max(max_branch_diff, std::abs(dispersion_series(k, h) - closed));
    }
  }
  report(2, "dispersion positivity", min_gap > 0.0 && max_branch_diff < 1e-10,
         fmt("min gap = %.3e (> 0), branch agreement = %.3e (tol 1e-10)", min_gap,
             max_branch_diff));
}

// 3. Projection duality.
void criterion_3() {
  const Params p = make(0.5, 0.25);
  const double cs = p.critical_c();
  const KernelBasis kb = kernel_basis(p);
  auto us = [&](double y) { return kb.u_star(y); };
  auto vs = [&](double y) { return kb.v_star(y); };
  auto zero = [](double) { return 0.0; };

  const double A0 = proj_A(us, 1.0, p);
  const double B1 = proj_B(vs, p);
  const double A1 = proj_A(zero, 0.0, p);
  const double B0 = proj_B(zero, p);
  const bool duality = std::abs(A0 - 1.0) < 1e-8 && std::abs(B1 - 1.0) < 1e-8 &&
                       std::abs(A1) < 1e-8 && std::abs(B0) < 1e-8;

  // 20 random smooth constrained triples: u deg-4 polynomial with layer means
  // removed, v = y(1-y) q(y), eta free.
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> uc(-1.0, 1.0);
  double worst_AL = 0.0, worst_BL = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    double c[5], q[3];
    for (double& x : c) x = uc(rng);
    for (double& x : q) x = uc(rng);
    auto u_raw = [&](double y) {
      return c[0] + y * (c[1] + y * (c[2] + y * (c[3] + y * c[4])));
    };
    const double m0 = integrate(u_raw, 0.0, p.h, 4) / p.h;
    const double m1 = integrate(u_raw, p.h, 1.0, 4) / (1.0 - p.h);
    // The constant part of the constraint correction drops out of every
    // functional below; only the slope beta survives in u'.
    const double beta = (m0 - m1) / ((1.0 + p.h) / 2.0 - p.h / 2.0);
    auto du = [&](double y) {
      return c[1] + y * (2 * c[2] + y * (3 * c[3] + y * 4 * c[4])) + beta;
    };
    auto v = [&](double y) { return y * (1.0 - y) * (q[0] + y * (q[1] + y * q[2])); };
    auto dv = [&](double y) {
      return (1.0 - 2.0 * y) * (q[0] + y * (q[1] + y * q[2])) +
             y * (1.0 - y) * (q[1] + 2.0 * y * q[2]);
    };
    const double eta = uc(rng);
    const double vh = v(p.h);
    auto Lf = [&](double y) { return p_coeff(y, p) * vh - dv(y); };
    auto Lg = [&](double y) { return du(y) - cs * eta * p_coeff_deriv(y, p); };
    worst_AL = std::max(worst_AL, std::abs(proj_A(Lf, vh / cs, p) - proj_B(v, p)));
    worst_BL = std::max(worst_BL, std::abs(proj_B(Lg, p)));
  }
  report(3, "projection duality", duality && worst_AL < 1e-6 && worst_BL < 1e-6,
         fmt("A(xi0)-1 = %.1e, B(xi1)-1 = %.1e, max|A(Lw)-B(w)| = %.1e, max|B(Lw)| = %.1e",
             A0 - 1.0, B1 - 1.0, worst_AL, worst_BL));
}

// 4. Residual orders per region.
void criterion_4() {
  const GridSpec grid{400, 200, 10.0, 1e-6};
  bool pass = true;
  std::string detail;
  for (std::size_t r = 0; r < kRegionPresets.size(); ++r) {
    const auto [h, w0] = kRegionPresets[r];
    const ScalingStudy s = scaling_study(make(h, w0), {1e-3, 5e-4, 2.5e-4}, grid);
    const bool ok = s.divergence_below_floor && s.slope_vorticity >= 1.7 &&
                    s.slope_vorticity <= 2.3 && s.slope_kinematic >= 2.3 &&
                    s.slope_kinematic <= 2.7 && s.slope_top_wall >= 2.3 &&
                    s.slope_top_wall <= 2.7;
    if (!ok || r == 0)
      detail += fmt("%s[%s: div<1e-12 %s, vort %.2f, kin %.2f, top %.2f]",
                    detail.empty() ? "" : " ", kRegionNames[r],
                    s.divergence_below_floor ? "y" : "n", s.slope_vorticity,
                    s.slope_kinematic, s.slope_top_wall);
    pass = pass && ok;
  }
  report(4, "residual orders (6 regions)", pass, detail);
}

// 5. Conserved-quantity drift under eps-halving.
void criterion_5() {
  const GridSpec grid{200, 64, 20.0, 1e-6};
  const std::vector<double> eps = {1e-3, 5e-4, 2.5e-4};
  std::vector<double> dq0, dq1;
  for (double e : eps) {
    const ConservedDrift d = conserved_drift(build_wave(make(0.5, 0.25, e)), grid);
    dq0.push_back(d.Q0);
    dq1.push_back(d.Q1);
  }
  const double s0 = fit_slope(eps, dq0), s1 = fit_slope(eps, dq1);
  report(5, "conserved-quantity drift", s0 >= 1.8 && s1 >= 1.8,
         fmt("fitted slopes Q0 = %.2f, Q1 = %.2f (tol >= 1.8)", s0, s1));
}

// 6. Pseudoflux annihilation.
void criterion_6() {
  double worst = 0.0;
  for (const auto& [h, w0] : kRegionPresets) {
    const WaveField w = build_wave(make(h, w0));
    const double W = x_halfwidth(w, 10.0);
    for (int i = 0; i < 100; ++i) {
      const double x = -W + 2.0 * W * i / 99.0;
      const auto [q0, q1] = pseudofluxes(w, x);
      worst = std::max({worst, std::abs(q0), std::abs(q1)});
    }
  }
  report(6, "pseudoflux annihilation", worst < 1e-10,
         fmt("max |q| = %.3e (tol 1e-10)", worst));
}

// 7. Table 1 reproduction.
void criterion_7() {
  struct Row {
    bool centre;
    StagnationLayer layer;
    WaveProfile profile;
    bool bounded;
  };
  const Row rows[] = {
      {false, StagnationLayer::upper, WaveProfile::elevation, false},
      {true, StagnationLayer::lower, WaveProfile::elevation, true},
      {true, StagnationLayer::lower, WaveProfile::elevation, false},
      {true, StagnationLayer::upper, WaveProfile::depression, false},
      {true, StagnationLayer::upper, WaveProfile::depression, true},
      {false, StagnationLayer::lower, WaveProfile::depression, false},
  };
  bool pass = true;
  std::string detail;
  for (std::size_t r = 0; r < kRegionPresets.size(); ++r) {
    const auto [h, w0] = kRegionPresets[r];
    const WaveField w = build_wave(make(h, w0));
    const StagnationReport rep = find_stagnation(w);
    bool ok = rep.is_centre == rows[r].centre && rep.layer == rows[r].layer &&
              rep.profile == rows[r].profile && rep.bounded_case == rows[r].bounded;
    double endpoint_err = 0.0;
    if (rows[r].bounded) {
      ok = ok && rep.wall_cluster_count == 2;
      const Streamline s = attached_streamline(w);
      const double wall = rep.wall_Y;
      endpoint_err = std::max(
          std::hypot(s.points.front().X + rep.X_star, s.points.front().Y - wall),
          std::hypot(s.points.back().X - rep.X_star, s.points.back().Y - wall));
      ok = ok && endpoint_err < 1e-4;
      detail += fmt(" [%s: endpoints err %.1e]", kRegionNames[r], endpoint_err);
    }
    if (!ok) detail += fmt(" [%s MISMATCH]", kRegionNames[r]);
    pass = pass && ok;
  }
  report(7, "Table 1 reproduction", pass,
         detail.empty() ? "all six region rows match" : "rows match;" + detail);
}

// 8. Streamline Psi-constancy.
void criterion_8() {
  bool pass = true;
  double worst_drift = 0.0, interface_err = 0.0;
  long traced = 0;
  for (const auto& [h, w0] : kRegionPresets) {
    const WaveField w = build_wave(make(h, w0));
    const double W = x_halfwidth(w, 10.0);
    TraceOptions opts;
    opts.x_cut = 1.05 * W;
    int count = 0;
    for (int i = 0; i < 10 && count < 50; ++i) {
      for (int j = 0; j < 5 && count < 50; ++j) {
        const double X0 = -0.8 * W + 1.6 * W * i / 9.0;
        const double Y0 = 0.12 + 0.76 * j / 4.0;
        const auto [U, V] = w.velocity(X0, Y0);
        if (std::hypot(U, V) < 1e-6) continue;
        const Streamline s = trace_streamline(w, X0, Y0, opts);
        const double rel = s.max_psi_drift / (1.0 + std::abs(s.psi_level));
        worst_drift = std::max(worst_drift, rel);
        if (rel >= 1e-6) pass = false;
        ++count;
        ++traced;
      }
    }
    // interface trace
    const double X0 = -0.9 * W;
    const Streamline s = trace_streamline(w, X0, w.interface_height(X0), opts);
    for (const auto& pt : s.points)
      interface_err = std::max(interface_err, std::abs(pt.Y - w.interface_height(pt.X)));
    if (interface_err >= 1e-6) pass = false;
  }
  report(8, "streamline Psi-constancy", pass,
         fmt("%ld streamlines, worst rel drift = %.2e (tol 1e-6), interface err = %.2e",
             traced, worst_drift, interface_err));
}

// 9. Sign laws.
void criterion_9() {
  bool pass = true;
  std::string detail;
  for (std::size_t r = 0; r < kRegionPresets.size(); ++r) {
    const auto [h, w0] = kRegionPresets[r];
    const SignCheckReport rep = sign_checks(build_wave(make(h, w0)), 400, 200);
    if (rep.eta_violations != 0 || rep.v_violations != 0) {
      pass = false;
      detail += fmt(" [%s: eta %ld, V %ld]", kRegionNames[r], rep.eta_violations,
                    rep.v_violations);
    }
  }
  report(9, "sign laws", pass,
         pass ? "zero violations on 400x200 interior grids, all regions" : detail);
}

// 10. Vorticity-function trichotomy.
void criterion_10() {
  const auto v1 = vorticity_function_probe(build_wave(make(0.25, 0.0))).verdict;
  const auto v2 = vorticity_function_probe(build_wave(make(0.25, 1.75))).verdict;
  // (0.5, 0.5) lies on the theta = 0 line where no wave exists; the shear
  // member eps = 0 carries the verdict there.
  const auto v3 = vorticity_function_probe(build_wave(make(0.5, 0.5, 0.0))).verdict;
  const bool pass = v1 == VorticityProbe::Verdict::no_function &&
                    v2 == VorticityProbe::Verdict::no_function &&
                    v3 == VorticityProbe::Verdict::exists;
  report(10, "vorticity-function trichotomy", pass,
         fmt("(0.25,0) -> %s, (0.25,1.75) -> %s, (0.5,~0.5) -> %s", to_string(v1).c_str(),
             to_string(v2).c_str(), to_string(v3).c_str()));
}

// 11. Discrete spectrum spot-check.
void criterion_11() {
  const Params p = make(0.5, 1.0);
  std::vector<SpectrumReport> reps;
  for (int n : {128, 256, 512}) reps.push_back(centre_spectrum_check(p, n));

  bool small = true, stable_gap = true;
  double gmin = 1e300, gmax = 0.0;
  for (const auto& r : reps) {
    small = small && r.smallest_moduli[0] < 1e-3 && r.smallest_moduli[1] < 1e-3;
    gmin = std::min(gmin, r.spectral_gap);
    gmax = std::max(gmax, r.spectral_gap);
  }
  stable_gap = gmin > 1.0 && gmax / gmin < 1.1;

  bool ratio_ok = true;
  std::string ratios;
  for (int i = 0; i + 1 < (int)reps.size(); ++i) {
    for (int k = 0; k < 2; ++k) {
      const double ratio = reps[i].smallest_moduli[k] / reps[i + 1].smallest_moduli[k];
      ratios += fmt(" %.2f", ratio);
      if (!(ratio >= 3.0 && ratio <= 5.0)) ratio_ok = false;
    }
  }
  const bool pass = small && stable_gap && ratio_ok;
  report(11, "discrete spectrum spot-check", pass,
         fmt("moduli {%.1e %.1e %.1e} (tol 1e-3), gap in [%.4f, %.4f] (stable: %s), "
             "refinement ratios%s (window [3,5]: %s; the discrete double zero is exact to "
             "rounding, so the pair sits at the noise floor instead of shrinking at a rate)",
             reps[0].smallest_moduli[1], reps[1].smallest_moduli[1],
             reps[2].smallest_moduli[1], gmin, gmax, stable_gap ? "yes" : "no",
             ratios.c_str(), ratio_ok ? "yes" : "no"));
}

} // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  std::printf("%d of 11 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
