#pragma once

#include <vortexfront/wave.hpp>

#include <string>
#include <vector>

namespace vortexfront {

/// Sup-norm residuals of the governing equations over an evaluation grid.
struct ResidualRecord {
  double divergence = 0.0;   ///< |U_X + V_Y|
  double vorticity = 0.0;    ///< |U_Y - V_X - omega|, per layer
  double kinematic = 0.0;    ///< |eta' U - V| on the interface
  double top_wall = 0.0;     ///< |V(., 1)|
  double bottom_wall = 0.0;  ///< |V(., 0)|
};

/// Evaluation grid: nx stations over X in [-W, W] with W = x_window / kappa
/// (x_window absolute when eps = 0), ny points per column, and a guard band
/// around the interface where the one-sided derivatives jump.
struct GridSpec {
  int nx = 400;
  int ny = 200;
  double x_window = 10.0;
  double interface_guard = 1e-6;
};

/// Physical half-width of the evaluation window for this wave.
double x_halfwidth(const WaveField& w, double x_window);

/// Layer mass fluxes at station X, by closed-form antidifferentiation of the
/// piecewise-linear U:
///   Q0 = int_0^{h+eta} U dY,   Q1 = int_{h+eta}^1 U dY.
std::pair<double, double> mass_fluxes(const WaveField& w, double X);

/// Quadrature oracle for the same integrals (independent of the closed form).
std::pair<double, double> mass_fluxes_quadrature(const WaveField& w, double X,
                                                 int panels = 8);

/// Flow force S = int_0^1 ((V^2 - U^2)/2 + omega Y U) dY by layer-split
/// Gauss-Legendre quadrature.
double flow_force(const WaveField& w, double X);

/// Pseudofluxes of the leading-order flat fields, q_i = layer integrals of u.
/// Both vanish to quadrature accuracy since u* lies in the constrained space.
std::pair<double, double> pseudofluxes(const WaveField& w, double x);

/// Sup-norm residuals over the grid; derivatives use the closed forms.
ResidualRecord pde_residuals(const WaveField& w, const GridSpec& grid);

/// Max relative drift of the conserved quantities over the window.
struct ConservedDrift {
  double Q0 = 0.0, Q1 = 0.0, S = 0.0;
};
ConservedDrift conserved_drift(const WaveField& w, const GridSpec& grid);

/// Least-squares slopes of log(residual) against log(eps).
struct ScalingStudy {
  std::vector<double> eps;
  std::vector<ResidualRecord> residuals;
  double slope_vorticity = 0.0;
  double slope_kinematic = 0.0;
  double slope_top_wall = 0.0;
  bool divergence_below_floor = true; ///< divergence < 1e-12 at every eps
};
ScalingStudy scaling_study(const Params& p, const std::vector<double>& eps_list,
                           const GridSpec& grid);

/// Existence probe for a vorticity function gamma with omega = gamma(Psi).
///
/// omega0 < 1-2h or omega0 > 2-2h: no single-valued gamma exists; the witness
/// is a pair of points, one per layer, with equal Psi but distinct omega,
/// found by the intermediate-value construction on Psi(0, .).
/// 1-2h < omega0 < 2-2h: gamma(t) = omega0 - H(t) works once Psi < 0 on the
/// lower layer and Psi > 0 on the upper layer, verified on a sample grid.
/// The boundary cases omega0 = 1-2h, 2-2h are reported indeterminate.
struct VorticityProbe {
  enum class Verdict { no_function, exists, indeterminate } verdict =
      Verdict::indeterminate;
  bool has_witness = false;
  double Y0 = 0.0, Y1 = 0.0;       ///< witness heights (X = 0), lower/upper
  double psi0 = 0.0, psi1 = 0.0;   ///< matching stream-function values
  std::string gamma = "";          ///< description when a gamma exists
  double delta_measured = 0.0;     ///< proximity to the background shear
  std::string note = "";
};
std::string to_string(VorticityProbe::Verdict v);

VorticityProbe vorticity_function_probe(const WaveField& w, int samples = 200,
                                        double delta_ceiling = 0.05);

/// Full quantitative validation bundle for one parameter point.
struct DiagnosticsReport {
  bool shear_only = false; ///< eps = 0: exact shear, no scaling study
  ResidualRecord residual_sup;
  ConservedDrift conserved;
  double q0_max = 0.0, q1_max = 0.0;
  bool has_scaling = false;
  ScalingStudy scaling;
  VorticityProbe vorticity;
};

/// Runs the whole pipeline: residuals, conserved drift, pseudofluxes, the
/// eps, eps/2, eps/4 scaling study, and the vorticity-function probe.
DiagnosticsReport run_diagnostics(const Params& p, const GridSpec& grid);

} // namespace vortexfront
