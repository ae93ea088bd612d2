// Cross-module consistency: the reduced-ODE route, the flat-coordinate
// fields, and the physical closed forms must tell the same story.

#include <vortexfront/flowfield.hpp>
#include <vortexfront/mobius.hpp>
#include <vortexfront/reduced_ode.hpp>
#include <vortexfront/wave.hpp>

#include <doctest.h>

#include <cmath>

using namespace vortexfront;

namespace {
Params make(double h, double omega0, double eps = 1e-3) {
  Params p;
  p.h = h;
  p.omega0 = omega0;
  p.eps = eps;
  return p;
}
} // namespace

TEST_CASE("RK4 + unscale reproduces the closed-form leading coefficients") {
  const Params p = make(0.5, 0.25);
  const WaveField w = build_wave(p);
  const UnscaledTrajectory u = unscale(integrate_reduced(-1.5, 0.0, 20.0, 1e-3), p);
  double da = 0.0, db = 0.0;
  for (std::size_t i = 0; i < u.samples.size(); i += 17) {
    da = std::max(da, std::abs(u.samples[i].a - w.a_eps(u.samples[i].x)));
    db = std::max(db, std::abs(u.samples[i].b - w.b_eps(u.samples[i].x)));
  }
  CHECK(da < 1e-8);
  CHECK(db < 1e-8);
}

TEST_CASE("flat leading fields pushed through the Mobius map match the physical U") {
  // The two approximants agree to the square of the interface amplitude.
  const Params p = make(0.5, 0.25);
  const WaveField w = build_wave(p);
  const double amp = 3.0 * p.eps / 0.25;
  double worst = 0.0;
  for (double x = -30.0; x <= 30.0; x += 1.7) {
    for (double y = 0.05; y <= 0.951; y += 0.09) {
      const auto [X, Y] = unflatten(x, y, w.eta(x), p.h);
      const auto [fp, md] = flatten(X, Y, w.eta(x), w.eta_x(x), p.h);
      const double U_flat = velocity_flat_to_phys(w.flat_leading(x, y).first, y, md, p);
      worst = std::max(worst, std::abs(U_flat - w.U(X, Y)));
    }
  }
  CHECK(worst < 5.0 * amp * amp);
  CHECK(worst > 0.0);
}

TEST_CASE("critical layer sits at flat height h - h(1-h)/omega1 + O(eps)") {
  const Params p = make(0.5, 0.25);
  const WaveField w = build_wave(p);
  const double target = p.h - p.h * (1.0 - p.h) / p.omega1();
  const double amp = 3.0 * p.eps / 0.25;
  for (double X : {0.0, 2.0, 5.0, 11.0, 20.0}) {
    const auto ys = critical_layer(w, X);
    REQUIRE(ys.has_value());
    const auto [fp, md] = flatten(X, *ys, w.eta(X), w.eta_x(X), p.h);
    CHECK(std::abs(fp.y - target) < amp);
  }
}
