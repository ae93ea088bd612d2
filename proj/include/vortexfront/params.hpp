#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace vortexfront {

/// Flow parameters for the two-layer constant-vorticity channel.
///
/// Only omega0 is stored; omega1 = omega0 - 1 is derived so the unit
/// vorticity jump across the interface cannot drift. eps = c - h(1-h) is the
/// bifurcation parameter; eps_max is the validity ceiling accepted by wave
/// construction.
struct Params {
  double h = 0.5;        ///< undisturbed interface height, in (0,1)
  double omega0 = 0.25;  ///< lower-layer vorticity
  double eps = 1e-3;     ///< bifurcation parameter, >= 0
  double eps_max = 1e-2; ///< admissible ceiling for eps

  double omega1() const { return omega0 - 1.0; }

  /// Vorticity of the layer containing flattened height y (lower for y < h).
  double omega_at(double y) const { return y < h ? omega0 : omega1(); }

  /// c* = h(1-h), the interface speed at the bifurcation point.
  double critical_c() const { return h * (1.0 - h); }

  /// Interface speed c = c* + eps.
  double c() const { return critical_c() + eps; }

  /// Throws std::domain_error when any invariant fails.
  void validate() const;

  bool operator==(const Params&) const = default;
};

/// theta = (3h-1) omega0 - (3h-2) omega1; controls wave polarity and the
/// nature of the stagnation point. Waves exist only for theta != 0.
double theta(const Params& p);

/// Below this |theta| the parameter point is treated as degenerate.
inline constexpr double kThetaZeroTol = 1e-12;

/// Absolute tolerance for detecting the bounded-critical-layer line
/// omega0 = 1 - h.
inline constexpr double kOmegaCriticalTol = 1e-10;

/// c*(h) = h(1-h). Throws on h outside (0,1).
double critical_speed(double h);

enum class Region { i, ii, iii, iv, v, vi, degenerate_theta_zero };
enum class WaveProfile { elevation, depression };
enum class StagnationLayer { lower, upper };
enum class StagnationNature { unique_saddle, unique_centre, non_unique_centre };

std::string to_string(Region r);
std::string to_string(WaveProfile w);
std::string to_string(StagnationLayer l);
std::string to_string(StagnationNature n);

/// One row of the parameter-space classification table.
struct RegionLabel {
  Region region = Region::degenerate_theta_zero;
  WaveProfile wave_profile = WaveProfile::elevation;
  StagnationLayer stagnation_layer = StagnationLayer::upper;
  StagnationNature stagnation_nature = StagnationNature::unique_saddle;
};

/// Maps (sign theta, omega0 vs 1-h) to the table row. |theta| < kThetaZeroTol
/// classifies as degenerate; the omega0 = 1-h line is detected within
/// kOmegaCriticalTol.
RegionLabel classify_region(const Params& p);

/// An X-independent solution: U = omega (Y - h - eta0) + c_tilde, V = 0.
struct ShearFlow {
  double eta0 = 0.0;    ///< constant interface offset, in (-h, 1-h)
  double c_tilde = 0.0; ///< horizontal velocity at the interface
};

/// Horizontal shear velocity at height Y in [0,1].
double shear_velocity(const Params& p, const ShearFlow& s, double Y);

struct EquilibriumRoot {
  double eta = 0.0;
  int multiplicity = 1;
};

/// All real roots of eta (eta^2 + theta eta + 2 eps) = 0 inside (-h, 1-h),
/// sorted ascending. The cubic is factored explicitly (eta times the
/// quadratic formula); roots outside the open interval are filtered at
/// tolerance 1e-14.
std::vector<EquilibriumRoot> equilibrium_interfaces(const Params& p);

/// Vertical reflection (h, omega0, omega1) -> (1-h, -omega1, -omega0).
/// Swaps the layers and flips the sign of theta.
Params reflect_vertical(const Params& p);

} // namespace vortexfront
