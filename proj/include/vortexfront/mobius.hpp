#pragma once

#include <vortexfront/params.hpp>

namespace vortexfront {

/// A point in flattened coordinates: x = X, y in [0,1] with the interface
/// pinned to y = h.
struct FlatPoint {
  double x = 0.0;
  double y = 0.0;
};

/// Partial derivatives of the flattening map y(X,Y) at a point.
struct MetricDerivatives {
  double y_X = 0.0;
  double y_Y = 1.0;
  double y_XY = 0.0;
  double y_YY = 0.0;
};

/// Mobius flattening of the strip: maps Y in [0,1] with interface at
/// h + eta to y in [0,1] with interface at h,
///
///   y = h (1-(h+eta)) Y / ((1-h)(h+eta) - eta Y),
///
/// together with the metric derivatives. eta_x enters the derivative bundle
/// only. Throws std::domain_error when h+eta leaves (0,1) or Y leaves [0,1].
std::pair<FlatPoint, MetricDerivatives> flatten(double X, double Y, double eta,
                                                double eta_x, double h);

/// Exact inverse of the Mobius map:
///   Y = (1-h)(h+eta) y / (h(1-(h+eta)) + eta y).
std::pair<double, double> unflatten(double x, double y, double eta, double h);

/// Physical horizontal velocity from the flat-coordinate velocity variable:
///   U = y_Y (u + omega (y-h) + c),   c = h(1-h) + eps.
/// Throws std::domain_error when the map is degenerate (y_Y <= 0).
double velocity_flat_to_phys(double u, double y, const MetricDerivatives& metric,
                             const Params& p);

} // namespace vortexfront
