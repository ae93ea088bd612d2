#include <vortexfront/params.hpp>

#include <algorithm>
#include <cmath>

namespace vortexfront {

void Params::validate() const {
  if (!(h > 0.0 && h < 1.0))
    throw std::domain_error("Params: h must lie in (0,1), got " + std::to_string(h));
  if (!(eps >= 0.0))
    throw std::domain_error("Params: eps must be >= 0, got " + std::to_string(eps));
  if (!(eps < eps_max))
    throw std::domain_error("Params: eps exceeds eps_max = " + std::to_string(eps_max));
}

double theta(const Params& p) {
  return (3.0 * p.h - 1.0) * p.omega0 - (3.0 * p.h - 2.0) * p.omega1();
}

double critical_speed(double h) {
  if (!(h > 0.0 && h < 1.0))
    throw std::domain_error("critical_speed: h must lie in (0,1)");
  return h * (1.0 - h);
}

std::string to_string(Region r) {
  switch (r) {
    case Region::i: return "i";
    case Region::ii: return "ii";
    case Region::iii: return "iii";
    case Region::iv: return "iv";
    case Region::v: return "v";
    case Region::vi: return "vi";
    case Region::degenerate_theta_zero: return "degenerate-theta-zero";
  }
  return "?";
}

std::string to_string(WaveProfile w) {
  return w == WaveProfile::elevation ? "elevation" : "depression";
}

std::string to_string(StagnationLayer l) {
  return l == StagnationLayer::lower ? "lower" : "upper";
}

std::string to_string(StagnationNature n) {
  switch (n) {
    case StagnationNature::unique_saddle: return "unique-saddle";
    case StagnationNature::unique_centre: return "unique-centre";
    case StagnationNature::non_unique_centre: return "non-unique-centre";
  }
  return "?";
}

RegionLabel classify_region(const Params& p) {
  p.validate();
  const double th = theta(p);
  RegionLabel out;
  if (std::abs(th) < kThetaZeroTol) {
    out.region = Region::degenerate_theta_zero;
    return out;
  }
  const double crit = 1.0 - p.h;
  const bool on_line = std::abs(p.omega0 - crit) <= kOmegaCriticalTol;
  const bool above = p.omega0 > crit;

  out.wave_profile = th < 0.0 ? WaveProfile::elevation : WaveProfile::depression;
  if (th < 0.0) {
    if (on_line) {
      out.region = Region::ii;
      out.stagnation_layer = StagnationLayer::lower;
      out.stagnation_nature = StagnationNature::non_unique_centre;
    } else if (above) {
      out.region = Region::iii;
      out.stagnation_layer = StagnationLayer::lower;
      out.stagnation_nature = StagnationNature::unique_centre;
    } else {
      out.region = Region::i;
      out.stagnation_layer = StagnationLayer::upper;
      out.stagnation_nature = StagnationNature::unique_saddle;
    }
  } else {
    if (on_line) {
      out.region = Region::v;
      out.stagnation_layer = StagnationLayer::upper;
      out.stagnation_nature = StagnationNature::non_unique_centre;
    } else if (above) {
      out.region = Region::vi;
      out.stagnation_layer = StagnationLayer::lower;
      out.stagnation_nature = StagnationNature::unique_saddle;
    } else {
      out.region = Region::iv;
      out.stagnation_layer = StagnationLayer::upper;
      out.stagnation_nature = StagnationNature::unique_centre;
    }
  }
  return out;
}

double shear_velocity(const Params& p, const ShearFlow& s, double Y) {
  if (!(Y >= 0.0 && Y <= 1.0))
    throw std::domain_error("shear_velocity: Y must lie in [0,1]");
  if (!(s.eta0 > -p.h && s.eta0 < 1.0 - p.h))
    throw std::domain_error("shear_velocity: eta0 must lie in (-h, 1-h)");
  const double yi = p.h + s.eta0;
  // Both branches agree at the interface itself.
  const double omega = Y < yi ? p.omega0 : p.omega1();
  return omega * (Y - yi) + s.c_tilde;
}

std::vector<EquilibriumRoot> equilibrium_interfaces(const Params& p) {
  p.validate();
  const double th = theta(p);
  const double lo = -p.h, hi = 1.0 - p.h;
  const double interval_tol = 1e-14;

  std::vector<EquilibriumRoot> roots;
  roots.push_back({0.0, 1});

  // eta^2 + theta eta + 2 eps = 0
  const double disc = th * th - 8.0 * p.eps;
  if (disc > 0.0) {
    const double sq = std::sqrt(disc);
    // Stable quadratic formula: avoid subtracting nearly equal numbers.
    const double q = -0.5 * (th + (th >= 0.0 ? sq : -sq));
    double r1 = q;                      // root with larger magnitude
    double r2 = (2.0 * p.eps) / q;      // q != 0 whenever disc > 0
    if (r1 > r2) std::swap(r1, r2);
    for (double r : {r1, r2}) {
      if (r > lo + interval_tol && r < hi - interval_tol) {
        if (r == 0.0)
          roots.front().multiplicity += 1;
        else
          roots.push_back({r, 1});
      }
    }
  } else if (disc == 0.0) {
    const double r = -0.5 * th;
    if (r > lo + interval_tol && r < hi - interval_tol) {
      if (r == 0.0)
        roots.front().multiplicity += 2;
      else
        roots.push_back({r, 2});
    }
  }

  std::sort(roots.begin(), roots.end(),
            [](const EquilibriumRoot& a, const EquilibriumRoot& b) { return a.eta < b.eta; });
  return roots;
}

Params reflect_vertical(const Params& p) {
  Params q = p;
  q.h = 1.0 - p.h;
  q.omega0 = -p.omega1(); // = 1 - omega0; the reflected omega1 is then -omega0
  return q;
}

} // namespace vortexfront
