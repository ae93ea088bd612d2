#include <vortexfront/mobius.hpp>

#include <cmath>
#include <utility>

namespace vortexfront {

namespace {
void check_interface(double eta, double h) {
  const double yi = h + eta;
  if (!(yi > 0.0 && yi < 1.0))
    throw std::domain_error("mobius: degenerate interface, h+eta outside (0,1)");
}

// Accept last-ulp excursions past the walls (the forward map pins the
// boundaries only up to rounding) and clamp them back.
double clamp_unit(double t, const char* what) {
  if (t >= 0.0 && t <= 1.0) return t;
  if (t > -1e-12 && t < 1.0 + 1e-12) return std::min(1.0, std::max(0.0, t));
  throw std::domain_error(std::string(what) + " must lie in [0,1]");
}
} // namespace

std::pair<FlatPoint, MetricDerivatives> flatten(double X, double Y, double eta,
                                                double eta_x, double h) {
  check_interface(eta, h);
  Y = clamp_unit(Y, "flatten: Y");

  const double yi = h + eta;           // interface height
  const double denom = (1.0 - h) * yi - eta * Y;
  const double y = h * (1.0 - yi) * Y / denom;

  // m = eta y - eta h + h(1-h) recurs in every derivative.
  const double m = eta * y - eta * h + h * (1.0 - h);
  const double chh = h * (1.0 - h);
  const double ab = yi * (1.0 - yi);

  MetricDerivatives d;
  d.y_X = -eta_x * y * (1.0 - y) / ab;
  d.y_Y = m * m / (chh * ab);
  d.y_XY = eta_x * m * m * (2.0 * y - 1.0) / (chh * ab * ab);
  d.y_YY = 2.0 * eta * m * m * m / (chh * chh * ab * ab);
  return {FlatPoint{X, y}, d};
}

std::pair<double, double> unflatten(double x, double y, double eta, double h) {
  check_interface(eta, h);
  y = clamp_unit(y, "unflatten: y");
  const double yi = h + eta;
  const double Y = (1.0 - h) * yi * y / (h * (1.0 - yi) + eta * y);
  return {x, Y};
}

double velocity_flat_to_phys(double u, double y, const MetricDerivatives& metric,
                             const Params& p) {
  if (!(metric.y_Y > 0.0))
    throw std::domain_error("velocity_flat_to_phys: degenerate map, y_Y <= 0");
  const double omega = p.omega_at(y);
  return metric.y_Y * (u + omega * (y - p.h) + p.c());
}

} // namespace vortexfront
