#include <vortexfront/wave.hpp>

#include <cmath>

namespace vortexfront {

WaveField::WaveField(const Params& p) : params_(p), kernel_{p} {
  p.validate();
  theta_ = theta(p);
  // No wave exists on the theta = 0 line, but the eps = 0 member is the
  // trivial shear, which needs no theta.
  if (std::abs(theta_) < kThetaZeroTol && p.eps > 0.0)
    throw std::domain_error("WaveField: theta = 0, no wave is constructed there");
  kappa_ = std::sqrt(3.0 * p.eps) / (2.0 * p.h * (1.0 - p.h));
  amp_ = p.eps == 0.0 ? 0.0 : -3.0 * p.eps / theta_;
}

WaveField build_wave(const Params& p) { return WaveField(p); }

double WaveField::eta(double X) const {
  const double s = 1.0 / std::cosh(kappa_ * X);
  return amp_ * s * s;
}

double WaveField::eta_x(double X) const {
  const double s = 1.0 / std::cosh(kappa_ * X);
  const double t = std::tanh(kappa_ * X);
  return -2.0 * amp_ * kappa_ * s * s * t;
}

double WaveField::eta_xx(double X) const {
  const double s2 = 1.0 / (std::cosh(kappa_ * X) * std::cosh(kappa_ * X));
  const double t = std::tanh(kappa_ * X);
  return 2.0 * amp_ * kappa_ * kappa_ * s2 * (2.0 * t * t - s2);
}

void WaveField::check_Y(double Y) const {
  if (!(Y >= 0.0 && Y <= 1.0))
    throw std::domain_error("WaveField: Y outside the strip [0,1]");
}

Layer WaveField::layer_at(double X, double Y) const {
  return Y <= interface_height(X) ? Layer::lower : Layer::upper;
}

double WaveField::U_branch(double X, double Y, Layer side) const {
  check_Y(Y);
  const Params& p = params_;
  const double e = eta(X);
  if (side == Layer::lower)
    return p.omega0 * (Y - p.h) + p.critical_c() + p.eps - (1.0 - p.h) * e;
  return p.omega1() * (Y - p.h) + p.critical_c() + p.eps + p.h * e;
}

double WaveField::V_branch(double X, double Y, Layer side) const {
  check_Y(Y);
  const double ex = eta_x(X);
  if (side == Layer::lower) return (1.0 - params_.h) * ex * Y;
  return ex * (params_.h * (1.0 - Y) + eta(X));
}

double WaveField::U(double X, double Y) const { return U_branch(X, Y, layer_at(X, Y)); }
double WaveField::V(double X, double Y) const { return V_branch(X, Y, layer_at(X, Y)); }

std::pair<double, double> WaveField::velocity(double X, double Y) const {
  const Layer side = layer_at(X, Y);
  return {U_branch(X, Y, side), V_branch(X, Y, side)};
}

double WaveField::U_X(double X, double Y) const {
  check_Y(Y);
  const double ex = eta_x(X);
  return layer_at(X, Y) == Layer::lower ? -(1.0 - params_.h) * ex : params_.h * ex;
}

double WaveField::U_Y(double X, double Y) const {
  check_Y(Y);
  return layer_at(X, Y) == Layer::lower ? params_.omega0 : params_.omega1();
}

double WaveField::V_X(double X, double Y) const {
  check_Y(Y);
  const double exx = eta_xx(X);
  if (layer_at(X, Y) == Layer::lower) return (1.0 - params_.h) * exx * Y;
  const double ex = eta_x(X);
  return exx * (params_.h * (1.0 - Y) + eta(X)) + ex * ex;
}

double WaveField::V_Y(double X, double Y) const {
  check_Y(Y);
  const double ex = eta_x(X);
  return layer_at(X, Y) == Layer::lower ? (1.0 - params_.h) * ex : -params_.h * ex;
}

double WaveField::psi(double X, double Y) const {
  check_Y(Y);
  const Params& p = params_;
  const double e = eta(X);
  const double yi = p.h + e;
  if (Y <= yi) {
    const double c0 = p.critical_c() + p.eps - (1.0 - p.h) * e;
    return 0.5 * p.omega0 * ((Y - p.h) * (Y - p.h) - e * e) + c0 * (Y - yi);
  }
  const double c1 = p.critical_c() + p.eps + p.h * e;
  return 0.5 * p.omega1() * ((Y - p.h) * (Y - p.h) - e * e) + c1 * (Y - yi);
}

double WaveField::psi_X(double X, double Y) const {
  check_Y(Y);
  const Params& p = params_;
  const double e = eta(X);
  const double ex = eta_x(X);
  const double yi = p.h + e;
  if (Y <= yi) {
    const double c0 = p.critical_c() + p.eps - (1.0 - p.h) * e;
    return -p.omega0 * e * ex - (1.0 - p.h) * ex * (Y - yi) - c0 * ex;
  }
  const double c1 = p.critical_c() + p.eps + p.h * e;
  return -p.omega1() * e * ex + p.h * ex * (Y - yi) - c1 * ex;
}

double WaveField::U_interface(double X) const {
  const Params& p = params_;
  return p.critical_c() + p.eps + (p.omega0 - (1.0 - p.h)) * eta(X);
}

double WaveField::kinematic_residual(double X) const {
  const Params& p = params_;
  return eta_x(X) * (p.eps + (p.omega0 - 2.0 * (1.0 - p.h)) * eta(X));
}

double WaveField::a_eps(double x) const { return eta(x); }

double WaveField::b_eps(double x) const {
  const Params& p = params_;
  if (p.eps == 0.0) return 0.0;
  const double s = 1.0 / std::cosh(kappa_ * x);
  const double t = std::tanh(kappa_ * x);
  return 3.0 * std::sqrt(3.0) * std::pow(p.eps, 1.5) / (p.h * (1.0 - p.h) * theta_) * t *
         s * s;
}

std::pair<double, double> WaveField::flat_leading(double x, double y) const {
  return {a_eps(x) * kernel_.u_star(y), b_eps(x) * kernel_.v_star(y)};
}

} // namespace vortexfront
