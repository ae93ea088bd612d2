#pragma once

#include <vortexfront/params.hpp>

#include <vector>

namespace vortexfront {

/// A sampled trajectory of the truncated reduced system
///   a' = b,  b' = a + a^2
/// in the rescaled variables. Homoclinic trajectories have a even and b odd
/// about x = 0, with b vanishing only there.
struct ReducedTrajectory {
  struct Sample {
    double x_tilde, a_tilde, b_tilde;
  };
  std::vector<Sample> samples; ///< ordered by x_tilde
  double step = 1e-3;
  bool diverged = false;       ///< |a| exceeded the overflow guard
};

/// Trajectory after undoing the rescaling, in unscaled (x, a, b).
struct UnscaledTrajectory {
  struct Sample {
    double x, a, b;
  };
  std::vector<Sample> samples;
  double eps = 0.0;
};

/// Explicit homoclinic orbit of the truncated system:
///   a0(x) = -(3/2) sech^2(x/2),  b0(x) = (3/2) tanh(x/2) sech^2(x/2).
std::pair<double, double> kdv_homoclinic_exact(double x_tilde);

/// Conserved energy of the truncated system, b^2/2 - a^2/2 - a^3/3.
/// Vanishes identically along the homoclinic orbit.
double reduced_energy(double a, double b);

/// Classical fixed-step RK4 on [-x_max, x_max], integrated outward from 0 in
/// both directions. Trajectories escaping |a| > 1e3 stop and are flagged
/// diverged. Throws std::domain_error on a nonpositive step or x_max.
ReducedTrajectory integrate_reduced(double a0, double b0, double x_max, double step);

/// Undo the rescaling:
///   x = h(1-h) x~ / sqrt(3 eps),  a = (2 eps/theta) a~,
///   b = 2 sqrt(3) eps^(3/2) / (h(1-h) theta) b~.
/// Requires eps > 0 (the scaling collapses at eps = 0).
UnscaledTrajectory unscale(const ReducedTrajectory& traj, const Params& p);

} // namespace vortexfront
