#pragma once

#include <array>
#include <cstddef>

namespace vortexfront {

// 16-point Gauss-Legendre rule on [-1,1]; nodes are the positive half,
// weights listed alongside. Exact for polynomials of degree <= 31.
namespace detail {
inline constexpr std::array<double, 8> kGL16Nodes = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
inline constexpr std::array<double, 8> kGL16Weights = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};
} // namespace detail

/// Single-panel 16-point Gauss-Legendre quadrature of f over [a,b].
template <class F>
double gauss16(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < detail::kGL16Nodes.size(); ++i) {
    const double dx = half * detail::kGL16Nodes[i];
    sum += detail::kGL16Weights[i] * (f(mid - dx) + f(mid + dx));
  }
  return half * sum;
}

/// Composite Gauss-Legendre over [a,b] with the given number of equal panels.
template <class F>
double integrate(F&& f, double a, double b, int panels = 4) {
  if (panels < 1) panels = 1;
  const double w = (b - a) / panels;
  double sum = 0.0;
  for (int k = 0; k < panels; ++k) sum += gauss16(f, a + k * w, a + (k + 1) * w);
  return sum;
}

/// Integral over [0,1] with panels split at the interior kink y = split.
/// Integrands here are piecewise smooth across the interface, so splitting
/// restores spectral accuracy; nodes never land on the split point itself.
template <class F>
double integrate_split(F&& f, double split, int panels_per_layer = 4) {
  return integrate(f, 0.0, split, panels_per_layer) +
         integrate(f, split, 1.0, panels_per_layer);
}

} // namespace vortexfront
