#include <vortexfront/mobius.hpp>

#include <doctest.h>

#include <cmath>

using namespace vortexfront;

namespace {

// Independent long-double reimplementation of the flattening map, used as
// the finite-difference oracle for the metric derivatives.
long double map_y(long double Y, long double eta, long double h) {
  const long double yi = h + eta;
  return h * (1.0L - yi) * Y / ((1.0L - h) * yi - eta * Y);
}

// Test interface profile with analytic slope.
struct Profile {
  double amp = 0.05, k = 0.7, off = 0.02;
  double eta(double X) const { return amp * std::sin(k * X) + off; }
  double eta_x(double X) const { return amp * k * std::cos(k * X); }
};

} // namespace

TEST_CASE("boundary pinning is exact") {
  const double h = 0.37;
  for (double eta : {-0.1, 0.0, 0.08}) {
    CHECK(flatten(1.2, 0.0, eta, 0.3, h).first.y == 0.0);
    CHECK(flatten(1.2, h + eta, eta, 0.3, h).first.y == doctest::Approx(h).epsilon(1e-15));
    CHECK(flatten(1.2, 1.0, eta, 0.3, h).first.y == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("identity map at zero perturbation") {
  const double h = 0.5;
  for (double Y : {0.0, 0.2, 0.5, 0.77, 1.0}) {
    const auto [fp, d] = flatten(0.0, Y, 0.0, 0.0, h);
    CHECK(fp.y == doctest::Approx(Y).epsilon(1e-15));
    CHECK(d.y_Y == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(d.y_X == 0.0);
    CHECK(d.y_XY == 0.0);
    CHECK(d.y_YY == 0.0);
  }
}

TEST_CASE("unflatten closed form and round trip") {
  // hand-evaluated inverse: h=0.5, eta=0.1, y=0.25 -> Y = 1/3
  CHECK(unflatten(0.0, 0.25, 0.1, 0.5).second == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(unflatten(0.0, 0.5, 0.1, 0.5).second == doctest::Approx(0.6).epsilon(1e-15));

  for (double h : {0.3, 0.5, 0.62}) {
    for (double eta : {-0.12, 0.0, 0.1}) {
      for (int i = 0; i <= 100; ++i) {
        for (int j = 0; j <= 100; ++j) {
          const double X = -5.0 + 0.1 * i;
          const double Y = j / 100.0;
          const auto [fp, d] = flatten(X, Y, eta, 0.0, h);
          const auto [Xb, Yb] = unflatten(fp.x, fp.y, eta, h);
          CHECK(std::abs(Yb - Y) < 1e-12);
          CHECK(Xb == X);
        }
      }
    }
  }
}

TEST_CASE("metric derivatives agree with finite differences of the map") {
  const double h = 0.4;
  const Profile pr;
  const long double dX = 1e-5L, dY = 1e-5L;
  double worst = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double X = -3.0 + 0.3 * i;
    for (int j = 1; j <= 20; ++j) {
      const double Y = j / 20.0; // includes the top wall Y = 1
      const auto [fp, d] = flatten(X, Y, pr.eta(X), pr.eta_x(X), h);

      auto y_at = [&](long double Xq, long double Yq) {
        return map_y(Yq, (long double)pr.eta((double)Xq), h);
      };
      const long double fd_yX = (y_at(X + dX, Y) - y_at(X - dX, Y)) / (2.0L * dX);
      const long double fd_yY = (y_at(X, Y + dY) - y_at(X, Y - dY)) / (2.0L * dY);
      const long double fd_yYY =
          (y_at(X, Y + dY) - 2.0L * y_at(X, Y) + y_at(X, Y - dY)) / (dY * dY);
      const long double fd_yXY = (y_at(X + dX, Y + dY) - y_at(X + dX, Y - dY) -
                                  y_at(X - dX, Y + dY) + y_at(X - dX, Y - dY)) /
                                 (4.0L * dX * dY);

      auto rel = [](double a, long double b) {
        return std::abs(a - (double)b) / std::max(1.0, std::abs((double)b));
      };
      worst = std::max({worst, rel(d.y_X, fd_yX), rel(d.y_Y, fd_yY),
                        rel(d.y_XY, fd_yXY), rel(d.y_YY, fd_yYY)});
    }
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("monotonicity in Y for moderate eta") {
  const double h = 0.45;
  for (double eta : {-0.1, 0.1}) {
    double prev = -1.0;
    for (int j = 0; j <= 200; ++j) {
      const double Y = j / 200.0;
      const double y = flatten(0.0, Y, eta, 0.0, h).first.y;
      CHECK(y > prev);
      prev = y;
    }
  }
}

TEST_CASE("degenerate interface rejected") {
  CHECK_THROWS_AS(flatten(0.0, 0.5, 0.6, 0.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(flatten(0.0, 0.5, -0.5, 0.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(unflatten(0.0, 0.5, 0.6, 0.5), std::domain_error);
  CHECK_THROWS_AS(flatten(0.0, 1.5, 0.0, 0.0, 0.5), std::domain_error);
}

TEST_CASE("velocity change of variables") {
  Params p;
  p.h = 0.5;
  p.omega0 = 1.0;
  p.eps = 0.0;

  // u = 0, eta = 0 reproduces the trivial shear at every height.
  for (double y : {0.0, 0.3, 0.5, 0.9, 1.0}) {
    const auto [fp, d] = flatten(0.0, y, 0.0, 0.0, p.h);
    const double U = velocity_flat_to_phys(0.0, fp.y, d, p);
    const double omega = y < p.h ? p.omega0 : p.omega1();
    CHECK(U == doctest::Approx(omega * (y - p.h) + p.c()).epsilon(1e-14));
  }
  {
    const auto [fp, d] = flatten(0.0, 0.0, 0.0, 0.0, p.h);
    CHECK(velocity_flat_to_phys(0.0, 0.0, d, p) == doctest::Approx(-0.25));
    CHECK(velocity_flat_to_phys(0.0, p.h, d, p) == doctest::Approx(p.c()));
  }

  MetricDerivatives bad;
  bad.y_Y = -1.0;
  CHECK_THROWS_AS(velocity_flat_to_phys(0.0, 0.5, bad, p), std::domain_error);
}
