#include <vortexfront/reduced_ode.hpp>

#include <algorithm>
#include <cmath>

namespace vortexfront {

std::pair<double, double> kdv_homoclinic_exact(double x_tilde) {
  const double s = 1.0 / std::cosh(0.5 * x_tilde);
  const double t = std::tanh(0.5 * x_tilde);
  return {-1.5 * s * s, 1.5 * t * s * s};
}

double reduced_energy(double a, double b) {
  return 0.5 * b * b - 0.5 * a * a - a * a * a / 3.0;
}

namespace {

struct State {
  double a, b;
};

State rhs(const State& s) { return {s.b, s.a + s.a * s.a}; }

State rk4_step(const State& s, double dx) {
  const State k1 = rhs(s);
  const State k2 = rhs({s.a + 0.5 * dx * k1.a, s.b + 0.5 * dx * k1.b});
  const State k3 = rhs({s.a + 0.5 * dx * k2.a, s.b + 0.5 * dx * k2.b});
  const State k4 = rhs({s.a + dx * k3.a, s.b + dx * k3.b});
  return {s.a + dx / 6.0 * (k1.a + 2.0 * k2.a + 2.0 * k3.a + k4.a),
          s.b + dx / 6.0 * (k1.b + 2.0 * k2.b + 2.0 * k3.b + k4.b)};
}

constexpr double kOverflowGuard = 1e3;

} // namespace

ReducedTrajectory integrate_reduced(double a0, double b0, double x_max, double step) {
  if (!(step > 0.0)) throw std::domain_error("integrate_reduced: step must be > 0");
  if (!(x_max > 0.0)) throw std::domain_error("integrate_reduced: x_max must be > 0");

  const int nsteps = static_cast<int>(std::ceil(x_max / step - 1e-12));

  ReducedTrajectory traj;
  traj.step = step;

  // Backward sweep first, collected in reverse so samples end up ordered.
  std::vector<ReducedTrajectory::Sample> left;
  State s{a0, b0};
  for (int i = 1; i <= nsteps; ++i) {
    s = rk4_step(s, -step);
    if (std::abs(s.a) > kOverflowGuard) {
      traj.diverged = true;
      break;
    }
    left.push_back({-i * step, s.a, s.b});
  }
  traj.samples.assign(left.rbegin(), left.rend());

  traj.samples.push_back({0.0, a0, b0});

  s = {a0, b0};
  for (int i = 1; i <= nsteps; ++i) {
    s = rk4_step(s, step);
    if (std::abs(s.a) > kOverflowGuard) {
      traj.diverged = true;
      break;
    }
    traj.samples.push_back({i * step, s.a, s.b});
  }
  return traj;
}

UnscaledTrajectory unscale(const ReducedTrajectory& traj, const Params& p) {
  p.validate();
  if (!(p.eps > 0.0))
    throw std::domain_error("unscale: rescaling undefined at eps = 0");
  const double th = theta(p);
  if (std::abs(th) < kThetaZeroTol)
    throw std::domain_error("unscale: theta = 0");

  const double chh = p.h * (1.0 - p.h);
  const double x_scale = chh / std::sqrt(3.0 * p.eps);
  const double a_scale = 2.0 * p.eps / th;
  const double b_scale = 2.0 * std::sqrt(3.0) * std::pow(p.eps, 1.5) / (chh * th);

  UnscaledTrajectory out;
  out.eps = p.eps;
  out.samples.reserve(traj.samples.size());
  for (const auto& s : traj.samples)
    out.samples.push_back({x_scale * s.x_tilde, a_scale * s.a_tilde, b_scale * s.b_tilde});
  return out;
}

} // namespace vortexfront
