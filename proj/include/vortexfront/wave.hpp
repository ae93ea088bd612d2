#pragma once

#include <vortexfront/params.hpp>
#include <vortexfront/spectral.hpp>

#include <utility>

namespace vortexfront {

/// Evaluable approximate solitary-wave solution.
///
/// Interface:  eta(X) = -(3 eps/theta) sech^2(kappa X),
///             kappa = sqrt(3 eps)/(2h(1-h)).
/// Velocity:   U = omega (Y-h) + c* + eps -(1-h) eta   below the interface,
///             U = omega (Y-h) + c* + eps + h eta      above it,
/// with omega selected by the layer Y vs h + eta(X), so U is continuous
/// across the interface. V := -int_0^Y U_X dY' in closed form (the sign that
/// makes the pair exactly divergence-free and satisfies the V sign law).
/// Psi = int_{h+eta}^Y U dY' layer-wise, quadratic in Y, zero on the
/// interface.
///
/// eps = 0 yields the trivial shear exactly. Fields are defined on the
/// closed strip Y in [0,1]; eta and its derivatives on all of R.
class WaveField {
 public:
  WaveField(const Params& p);

  const Params& params() const { return params_; }
  double kappa() const { return kappa_; }
  double theta_value() const { return theta_; }
  const KernelBasis& kernel() const { return kernel_; }

  double eta(double X) const;
  double eta_x(double X) const;
  double eta_xx(double X) const;
  double interface_height(double X) const { return params_.h + eta(X); }

  /// Lower-layer branch is used on the interface curve itself.
  Layer layer_at(double X, double Y) const;

  double U(double X, double Y) const;
  double V(double X, double Y) const;
  std::pair<double, double> velocity(double X, double Y) const;

  /// One-sided branch values, for continuity checks across the interface.
  double U_branch(double X, double Y, Layer side) const;
  double V_branch(double X, double Y, Layer side) const;

  // Closed-form partial derivatives, branch chosen like U/V.
  double U_X(double X, double Y) const;
  double U_Y(double X, double Y) const;
  double V_X(double X, double Y) const;
  double V_Y(double X, double Y) const;

  double psi(double X, double Y) const;
  double psi_X(double X, double Y) const;
  double psi_Y(double X, double Y) const { return U(X, Y); }

  /// U on the interface curve, c* + eps + (omega0 - (1-h)) eta(X).
  double U_interface(double X) const;

  /// Kinematic-interface defect of the approximant,
  ///   eta' U - V on Y = h+eta  =  eta'(X) (eps + (omega0 - 2(1-h)) eta(X)).
  /// This is also the gap in Psi_X = -V; both are O(eps^{5/2}).
  double kinematic_residual(double X) const;

  // Leading-order flat-coordinate fields: u = a(x) u*(y), v = b(x) v*(y).
  double a_eps(double x) const;
  double b_eps(double x) const;
  std::pair<double, double> flat_leading(double x, double y) const;

 private:
  void check_Y(double Y) const;

  Params params_;
  double theta_ = 0.0;
  double kappa_ = 0.0;
  double amp_ = 0.0; // -(3 eps / theta)
  KernelBasis kernel_;
};

/// Validates theta != 0 and 0 <= eps < eps_max, then assembles the field.
/// eps = 0 is admitted and produces the exact trivial shear.
WaveField build_wave(const Params& p);

} // namespace vortexfront
