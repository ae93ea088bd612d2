#include <vortexfront/flowfield.hpp>

#include <vortexfront/diagnostics.hpp>
#include <vortexfront/mobius.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace vortexfront {

namespace {

bool bounded_line(const Params& p) {
  return std::abs(p.omega0 - (1.0 - p.h)) <= kOmegaCriticalTol;
}

// Canonical analysis frame: omega0 <= 1-h, and h > 1/2 on the bounded line
// so the critical layer sits in the upper layer.
bool needs_reflection(const Params& p) {
  if (p.omega0 > 1.0 - p.h + kOmegaCriticalTol) return true;
  if (bounded_line(p) && p.h < 0.5) return true;
  return false;
}

double clampY(double Y) { return std::min(1.0, std::max(0.0, Y)); }

// Bisection of U(X, .) = 0 on [a, b]; assumes a sign change.
double bisect_U(const WaveField& w, double X, double a, double b) {
  double fa = w.U(X, a);
  for (int it = 0; it < 200 && b - a > 1e-12; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = w.U(X, m);
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

std::pair<Params, bool> normalize_orientation(const Params& p) {
  if (p.omega0 > 1.0 - p.h + kOmegaCriticalTol) return {reflect_vertical(p), true};
  return {p, false};
}

std::optional<double> critical_layer(const WaveField& w, double X) {
  const double yi = w.interface_height(X);
  // U > 0 on the interface and U_Y = omega1 < 0 above it; a root exists iff
  // U(X, 1) <= 0.
  if (w.U(X, 1.0) > 0.0) return std::nullopt;
  return bisect_U(w, X, yi, 1.0);
}

namespace {

// X* > 0 with U(X*, 1) = 0 in the normalized bounded frame: scan for the
// sign change of U(., 1) then bisect.
double locate_X_star(const WaveField& w, double x_cut) {
  if (!(w.U(0.0, 1.0) < 0.0))
    throw std::runtime_error("locate_X_star: U(0,1) >= 0, no bounded region");
  const int nscan = 400;
  double a = 0.0;
  double fa = w.U(a, 1.0);
  for (int i = 1; i <= nscan; ++i) {
    const double b = x_cut * i / nscan;
    const double fb = w.U(b, 1.0);
    if ((fa <= 0.0) != (fb <= 0.0)) {
      // bisect on [a, b]
      double lo = a, hi = b, flo = fa;
      for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        const double m = 0.5 * (lo + hi);
        const double fm = w.U(m, 1.0);
        if ((flo <= 0.0) == (fm <= 0.0)) {
          lo = m;
          flo = fm;
        } else {
          hi = m;
        }
      }
      return 0.5 * (lo + hi);
    }
    a = b;
    fa = fb;
  }
  throw std::runtime_error("locate_X_star: failed to bracket a sign change of U(.,1)");
}

// Newton refinement of a stagnation point from a grid candidate, using the
// closed-form Jacobian of (U, V). Iterates escaping the detectable window
// are rejected: on the exponential tail Newton chases a root at X = infinity.
bool refine_stagnation(const WaveField& w, double& X, double& Y, double x_bound) {
  for (int it = 0; it < 60; ++it) {
    const double U = w.U(X, Y), V = w.V(X, Y);
    if (std::max(std::abs(U), std::abs(V)) < 1e-12) return true;
    const double a = w.U_X(X, Y), b = w.U_Y(X, Y);
    const double c = w.V_X(X, Y), d = w.V_Y(X, Y);
    const double det = a * d - b * c;
    if (std::abs(det) < 1e-30) return false;
    const double dX = (U * d - V * b) / det;
    const double dY = (V * a - U * c) / det;
    X -= dX;
    Y -= dY;
    if (!(Y > 1e-9 && Y < 1.0 - 1e-9)) return false;
    if (std::abs(X) > x_bound) return false;
    if (std::abs(dX) + std::abs(dY) < 1e-14 &&
        std::max(std::abs(w.U(X, Y)), std::abs(w.V(X, Y))) < 1e-8)
      return true;
  }
  return std::max(std::abs(w.U(X, Y)), std::abs(w.V(X, Y))) < 1e-8;
}

} // namespace

StagnationReport find_stagnation(const WaveField& w) {
  const Params& orig = w.params();
  const double th = theta(orig);
  if (std::abs(th) < kThetaZeroTol)
    throw std::domain_error("find_stagnation: theta = 0");

  const bool reflect = needs_reflection(orig);
  const Params pn = reflect ? reflect_vertical(orig) : orig;
  const WaveField wn = reflect ? build_wave(pn) : w;

  StagnationReport rep;
  rep.reflected = reflect;
  rep.profile = th < 0.0 ? WaveProfile::elevation : WaveProfile::depression;
  rep.bounded_case = bounded_line(pn);

  // Interior stagnation point on the symmetry axis, in the normalized frame.
  const auto ys = critical_layer(wn, 0.0);
  if (!ys)
    throw std::runtime_error("find_stagnation: no critical layer at X = 0");
  const double Ystar = *ys;

  // Centre/saddle from the reduced determinant -V_X (omega1 + V_X); V_X by
  // centered differences in X at the stagnation point. In the bounded case
  // the point lies within O(eps) of the wall, where the physical approximant's
  // V sits at its own error floor; there the flat-coordinate leading-order
  // field v = b(x) v*(y) supplies V_X instead (V = v pointwise and y_X
  // vanishes on the symmetry axis).
  const double fd = 1e-6;
  double V_X;
  if (rep.bounded_case) {
    const double bx0 = (wn.b_eps(fd) - wn.b_eps(-fd)) / (2.0 * fd);
    const auto [fp, md] = flatten(0.0, Ystar, wn.eta(0.0), 0.0, pn.h);
    V_X = bx0 * wn.kernel().v_star(fp.y);
  } else {
    V_X = (wn.V(fd, Ystar) - wn.V(-fd, Ystar)) / (2.0 * fd);
  }
  rep.det = -V_X * (pn.omega1() + V_X);
  rep.is_centre = rep.det > 0.0;

  const double W = x_halfwidth(wn, 10.0);

  if (rep.bounded_case) {
    rep.X_star = locate_X_star(wn, W);
    rep.wall_Y = reflect ? 0.0 : 1.0;
  }

  // Critical-layer geometry over the window.
  const int nsamp = 201;
  const double span = rep.bounded_case ? rep.X_star : W;
  bool all_present = true;
  for (int i = 0; i < nsamp; ++i) {
    const double X = -span + 2.0 * span * i / (nsamp - 1.0);
    const auto y = critical_layer(wn, X);
    if (!y) {
      all_present = false;
      continue;
    }
    rep.critical_layer_curve.emplace_back(X, reflect ? 1.0 - *y : *y);
  }
  rep.critical_layer_bounded = rep.bounded_case;
  if (!rep.bounded_case && !all_present)
    throw std::runtime_error("find_stagnation: unexpected gap in the critical layer");

  // Stagnation sweep: refine local speed minima on a coarse grid and cluster.
  // The sweep stays inside the window where the wave is numerically
  // distinguishable from its far-field shear; beyond it the entire critical
  // layer falls under the detection floor.
  double Wdetect = W;
  {
    const double floor10 = 1e-7;
    const double bracket = std::max(w.params().h, 1.0 - w.params().h);
    while (Wdetect > 1.0 && std::abs(w.eta_x(Wdetect)) * bracket < floor10)
      Wdetect *= 0.95;
  }
  std::vector<std::pair<double, double>> clusters;
  auto add_cluster = [&](double X, double Y) {
    for (const auto& c : clusters)
      if (std::hypot(c.first - X, c.second - Y) < 1e-3 * std::max(1.0, W)) return;
    clusters.emplace_back(X, Y);
  };

  // Interior V = 0 requires X = 0 by oddness, so stagnation points on the
  // symmetry axis are the sign changes of U(0, .).
  {
    const int ns = 800;
    double prev = w.U(0.0, 1e-3);
    for (int j = 1; j < ns; ++j) {
      const double Y = 1e-3 + (1.0 - 2e-3) * j / (ns - 1.0);
      const double cur = w.U(0.0, Y);
      if ((prev <= 0.0) != (cur <= 0.0)) {
        const double Ylo = 1e-3 + (1.0 - 2e-3) * (j - 1) / (ns - 1.0);
        add_cluster(0.0, bisect_U(w, 0.0, Ylo, Y));
      }
      prev = cur;
    }
  }

  // Corroborating 2-D sweep over local speed minima.
  const int gx = 61, gy = 81;
  for (int i = 1; i + 1 < gx; ++i) {
    for (int j = 1; j + 1 < gy; ++j) {
      double X = -Wdetect + 2.0 * Wdetect * i / (gx - 1.0);
      double Y = 1e-3 + (1.0 - 2e-3) * j / (gy - 1.0);
      auto speed2 = [&](int di, int dj) {
        const double Xs = -Wdetect + 2.0 * Wdetect * (i + di) / (gx - 1.0);
        const double Ys = 1e-3 + (1.0 - 2e-3) * (j + dj) / (gy - 1.0);
        const auto [U, V] = w.velocity(Xs, clampY(Ys));
        return U * U + V * V;
      };
      const double s0 = speed2(0, 0);
      if (s0 > speed2(1, 0) || s0 > speed2(-1, 0) || s0 > speed2(0, 1) ||
          s0 > speed2(0, -1))
        continue;
      if (!refine_stagnation(w, X, Y, Wdetect)) continue;
      add_cluster(X, Y);
    }
  }
  rep.interior_cluster_count = static_cast<int>(clusters.size());

  // Wall stagnation: on the walls V vanishes identically for the flow, so
  // wall stagnation points are the roots of U along the wall.
  int wall_roots = 0;
  for (double wallY : {0.0, 1.0}) {
    double prev = w.U(-W, wallY);
    for (int i = 1; i < 400; ++i) {
      const double X = -W + 2.0 * W * i / 399.0;
      const double cur = w.U(X, wallY);
      if ((prev <= 0.0) != (cur <= 0.0)) ++wall_roots;
      prev = cur;
    }
  }
  rep.wall_cluster_count = wall_roots;

  // Report the interior point in the original frame.
  rep.X = 0.0;
  rep.Y = reflect ? 1.0 - Ystar : Ystar;
  rep.layer = rep.Y < w.interface_height(0.0) ? StagnationLayer::lower
                                              : StagnationLayer::upper;
  return rep;
}

std::string to_string(Streamline::Termination t) {
  switch (t) {
    case Streamline::Termination::closed_orbit: return "closed-orbit";
    case Streamline::Termination::domain_exit: return "domain-exit";
    case Streamline::Termination::stagnation_approach: return "stagnation-approach";
    case Streamline::Termination::wall_attachment: return "wall-attachment";
    case Streamline::Termination::step_limit: return "step-limit";
  }
  return "?";
}

Streamline trace_streamline(const WaveField& w, double X0, double Y0,
                            const TraceOptions& opts) {
  const double x_cut = opts.x_cut > 0.0 ? opts.x_cut : 1.2 * x_halfwidth(w, 10.0);
  const double dir = opts.backward ? -1.0 : 1.0;

  auto unit_field = [&](double X, double Y, double& fx, double& fy) {
    const auto [U, V] = w.velocity(X, clampY(Y));
    const double s = std::hypot(U, V);
    fx = dir * U / s;
    fy = dir * V / s;
    return s;
  };

  Streamline line;
  line.psi_level = w.psi(X0, clampY(Y0));

  {
    const auto [U, V] = w.velocity(X0, clampY(Y0));
    if (std::hypot(U, V) < opts.speed_floor)
      throw std::domain_error("trace_streamline: seed speed below the stagnation floor");
  }

  const bool seed_on_wall = Y0 < 1e-12 || Y0 > 1.0 - 1e-12;
  const bool project = opts.project && !seed_on_wall;

  double X = X0, Y = Y0;
  line.points.push_back({X, Y, line.psi_level});

  for (long n = 0; n < opts.max_steps; ++n) {
    double fx, fy;
    const double speed = unit_field(X, Y, fx, fy);
    if (speed < opts.speed_floor) {
      line.termination = Streamline::Termination::stagnation_approach;
      return line;
    }
    // Shrink the arclength step near stagnation so the saddle is approached
    // rather than jumped across.
    const double slow = 1e3 * opts.speed_floor;
    const double ds = opts.step * (speed >= slow ? 1.0 : speed / slow);

    double k1x = fx, k1y = fy, k2x, k2y, k3x, k3y, k4x, k4y;
    unit_field(X + 0.5 * ds * k1x, Y + 0.5 * ds * k1y, k2x, k2y);
    unit_field(X + 0.5 * ds * k2x, Y + 0.5 * ds * k2y, k3x, k3y);
    unit_field(X + ds * k3x, Y + ds * k3y, k4x, k4y);
    X += ds / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    Y += ds / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);

    if (Y <= 0.0 || Y >= 1.0) {
      if (seed_on_wall && Y > -1e-9 && Y < 1.0 + 1e-9) {
        Y = clampY(Y); // degenerate trace along the wall
      } else {
        line.points.push_back({X, clampY(Y), w.psi(X, clampY(Y))});
        line.termination = Streamline::Termination::wall_attachment;
        return line;
      }
    }

    if (project) {
      // One or two Newton corrections along grad Psi restore the level. The
      // displacement is capped so the corrector cannot jump branches where
      // the gradient collapses near a stagnation point.
      for (int it = 0; it < 3; ++it) {
        const double d = w.psi(X, Y) - line.psi_level;
        if (std::abs(d) < 1e-14 * (1.0 + std::abs(line.psi_level))) break;
        const double gx = w.psi_X(X, Y);
        const double gy = w.psi_Y(X, Y);
        const double g2 = gx * gx + gy * gy;
        if (g2 < 1e-30) break;
        const double scale = d / g2;
        if (std::hypot(scale * gx, scale * gy) > 2.0 * ds) break;
        X -= scale * gx;
        Y -= scale * gy;
        if (Y < 0.0 || Y > 1.0) {
          Y = clampY(Y);
          break;
        }
      }
    }

    const double ps = w.psi(X, Y);
    line.max_psi_drift = std::max(line.max_psi_drift, std::abs(ps - line.psi_level));
    line.points.push_back({X, Y, ps});

    if (std::abs(X) > x_cut) {
      line.termination = Streamline::Termination::domain_exit;
      return line;
    }
    if (n > 20 && std::hypot(X - X0, Y - Y0) < 0.5 * opts.step) {
      line.termination = Streamline::Termination::closed_orbit;
      return line;
    }
  }
  line.termination = Streamline::Termination::step_limit;
  return line;
}

Streamline attached_streamline(const WaveField& w) {
  const Params& orig = w.params();
  if (!bounded_line(orig))
    throw std::domain_error("attached_streamline: only defined on omega0 = 1-h");

  const bool reflect = needs_reflection(orig);
  const Params pn = reflect ? reflect_vertical(orig) : orig;
  const WaveField wn = reflect ? build_wave(pn) : w;

  const double W = x_halfwidth(wn, 10.0);
  const double Xs = locate_X_star(wn, W);

  // On omega0 = 1-h the interface term drops out of C1 + omega1 eta, so the
  // approximant's Psi is exactly constant along the critical layer: the
  // Psi(X*, wall) level set degenerates onto Y*(X), with both endpoints at
  // the boundary saddles, and grad Psi vanishes along the whole curve. The
  // attached streamline is therefore represented as this level locus
  // directly; a velocity-following trace cannot ride a degenerate level
  // curve that the O(eps^{5/2}) residual flow crosses transversally.
  const double level = wn.psi(Xs, 1.0);

  Streamline out;
  out.psi_level = level;
  out.termination = Streamline::Termination::wall_attachment;

  const int nsamp = 4001;
  out.points.push_back({-Xs, 1.0, wn.psi(-Xs, 1.0)});
  for (int i = 1; i + 1 < nsamp; ++i) {
    const double X = -Xs + 2.0 * Xs * i / (nsamp - 1.0);
    const auto y = critical_layer(wn, X);
    if (!y) continue;
    const double ps = wn.psi(X, *y);
    out.max_psi_drift = std::max(out.max_psi_drift, std::abs(ps - level));
    out.points.push_back({X, *y, ps});
  }
  out.points.push_back({Xs, 1.0, wn.psi(Xs, 1.0)});

  if (reflect) {
    // The reflected stream function is -Psi composed with Y -> 1-Y.
    out.psi_level = -out.psi_level;
    for (auto& pt : out.points) {
      pt.Y = 1.0 - pt.Y;
      pt.psi = -pt.psi;
    }
  }
  return out;
}

namespace {

// Marching squares on the sampled Psi grid. Segment endpoints live on cell
// edges, so polyline joining can key on exact edge ids.
struct EdgePoint {
  long edge_id;
  double X, Y;
};

void contour_level(const std::vector<std::vector<double>>& F,
                   const std::vector<double>& Xs, const std::vector<double>& Ys,
                   double level, std::vector<std::vector<Streamline::Point>>& out) {
  const int nx = static_cast<int>(Xs.size());
  const int ny = static_cast<int>(Ys.size());
  auto hedge = [&](int i, int j) { return static_cast<long>(j) * nx + i; }; // (i,j)-(i+1,j)
  auto vedge = [&](int i, int j) {
    return static_cast<long>(nx) * ny + static_cast<long>(j) * nx + i; // (i,j)-(i,j+1)
  };

  auto interp = [&](double a, double b, double xa, double xb) {
    const double tl = (level - a) / (b - a);
    return xa + (xb - xa) * tl;
  };

  std::vector<std::pair<EdgePoint, EdgePoint>> segs;
  for (int i = 0; i + 1 < nx; ++i) {
    for (int j = 0; j + 1 < ny; ++j) {
      const double f00 = F[i][j], f10 = F[i + 1][j], f01 = F[i][j + 1],
                   f11 = F[i + 1][j + 1];
      int mask = 0;
      if (f00 > level) mask |= 1;
      if (f10 > level) mask |= 2;
      if (f11 > level) mask |= 4;
      if (f01 > level) mask |= 8;
      if (mask == 0 || mask == 15) continue;

      EdgePoint bottom{hedge(i, j), interp(f00, f10, Xs[i], Xs[i + 1]), Ys[j]};
      EdgePoint top{hedge(i, j + 1), interp(f01, f11, Xs[i], Xs[i + 1]), Ys[j + 1]};
      EdgePoint left{vedge(i, j), Xs[i], interp(f00, f01, Ys[j], Ys[j + 1])};
      EdgePoint right{vedge(i + 1, j), Xs[i + 1], interp(f10, f11, Ys[j], Ys[j + 1])};

      auto add = [&](const EdgePoint& a, const EdgePoint& b) { segs.emplace_back(a, b); };
      switch (mask) {
        case 1: case 14: add(left, bottom); break;
        case 2: case 13: add(bottom, right); break;
        case 3: case 12: add(left, right); break;
        case 4: case 11: add(top, right); break;
        case 6: case 9: add(bottom, top); break;
        case 7: case 8: add(left, top); break;
        case 5: case 10: {
          // Saddle cell: split by the centre value.
          const double centre = 0.25 * (f00 + f10 + f01 + f11);
          const bool c = centre > level;
          if ((mask == 5) == c) {
            add(left, top);
            add(bottom, right);
          } else {
            add(left, bottom);
            add(top, right);
          }
          break;
        }
        default: break;
      }
    }
  }

  // Join segments into polylines via shared edge ids.
  std::multimap<long, std::size_t> by_edge;
  for (std::size_t s = 0; s < segs.size(); ++s) {
    by_edge.emplace(segs[s].first.edge_id, s);
    by_edge.emplace(segs[s].second.edge_id, s);
  }
  std::vector<bool> used(segs.size(), false);

  for (std::size_t s0 = 0; s0 < segs.size(); ++s0) {
    if (used[s0]) continue;
    used[s0] = true;
    std::vector<EdgePoint> chain = {segs[s0].first, segs[s0].second};
    // Grow forward then backward.
    for (int pass = 0; pass < 2; ++pass) {
      bool grew = true;
      while (grew) {
        grew = false;
        const long tip = chain.back().edge_id;
        auto range = by_edge.equal_range(tip);
        for (auto it = range.first; it != range.second; ++it) {
          const std::size_t s = it->second;
          if (used[s]) continue;
          used[s] = true;
          chain.push_back(segs[s].first.edge_id == tip ? segs[s].second : segs[s].first);
          grew = true;
          break;
        }
      }
      std::reverse(chain.begin(), chain.end());
    }
    std::vector<Streamline::Point> pts;
    pts.reserve(chain.size());
    for (const auto& ep : chain) pts.push_back({ep.X, ep.Y, level});
    out.push_back(std::move(pts));
  }
}

} // namespace

Portrait portrait(const WaveField& w, const PortraitOptions& opts) {
  Portrait por;
  por.requested_levels = opts.levels;
  const double W = x_halfwidth(w, opts.x_window);

  std::vector<double> Xs(opts.nx), Ys(opts.ny);
  for (int i = 0; i < opts.nx; ++i) Xs[i] = -W + 2.0 * W * i / (opts.nx - 1.0);
  for (int j = 0; j < opts.ny; ++j) Ys[j] = static_cast<double>(j) / (opts.ny - 1.0);

  std::vector<std::vector<double>> F(opts.nx, std::vector<double>(opts.ny));
  double fmin = 1e300, fmax = -1e300;
  for (int i = 0; i < opts.nx; ++i)
    for (int j = 0; j < opts.ny; ++j) {
      F[i][j] = w.psi(Xs[i], Ys[j]);
      fmin = std::min(fmin, F[i][j]);
      fmax = std::max(fmax, F[i][j]);
    }

  int id = 0;
  for (int l = 0; l < opts.levels; ++l) {
    const double level = fmin + (fmax - fmin) * (l + 0.5) / opts.levels;
    std::vector<std::vector<Streamline::Point>> polys;
    contour_level(F, Xs, Ys, level, polys);
    if (!polys.empty()) ++por.nonempty_levels;
    for (auto& pl : polys) {
      Portrait::Curve c;
      c.id = id++;
      c.kind = "streamline";
      c.points = std::move(pl);
      por.curves.push_back(std::move(c));
    }
  }

  // Interface curve (the dashed streamline of the portraits).
  {
    Portrait::Curve c;
    c.id = id++;
    c.kind = "interface";
    for (int i = 0; i < opts.nx; ++i)
      c.points.push_back({Xs[i], w.interface_height(Xs[i]), 0.0});
    por.curves.push_back(std::move(c));
  }

  if (w.params().eps > 0.0) {
    por.has_stagnation = true;
    por.stagnation = find_stagnation(w);
    if (!por.stagnation.critical_layer_curve.empty()) {
      Portrait::Curve c;
      c.id = id++;
      c.kind = "critical_layer";
      for (const auto& [X, Y] : por.stagnation.critical_layer_curve)
        c.points.push_back({X, Y, w.psi(X, Y)});
      por.curves.push_back(std::move(c));
    }
  }
  return por;
}

SignCheckReport sign_checks(const WaveField& w, int nx, int ny, double x_window,
                            double wall_margin) {
  const double th = w.theta_value();
  const double W = x_halfwidth(w, x_window);
  SignCheckReport rep;

  for (int i = 0; i < nx; ++i) {
    const double X = -W + 2.0 * W * i / (nx - 1.0);
    ++rep.eta_checked;
    if (w.eta_x(X) * (th * X) < 0.0) {
      ++rep.eta_violations;
      rep.worst_eta_X = X;
    }
  }

  for (int i = 0; i < nx; ++i) {
    const double X = -W + 2.0 * W * i / (nx - 1.0);
    for (int j = 0; j < ny; ++j) {
      const double Y = wall_margin + (1.0 - 2.0 * wall_margin) * j / (ny - 1.0);
      ++rep.v_checked;
      if (w.V(X, Y) * (th * X) < 0.0) {
        ++rep.v_violations;
        rep.worst_v_X = X;
        rep.worst_v_Y = Y;
      }
    }
  }
  return rep;
}

} // namespace vortexfront
