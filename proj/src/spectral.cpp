#include <vortexfront/spectral.hpp>

#include <vortexfront/quadrature.hpp>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace vortexfront {

namespace {
double coth(double z) { return 1.0 / std::tanh(z); }
} // namespace

double dispersion_series(double k, double h) {
  const double k2 = k * k;
  const double h3 = h * h * h;
  const double g3 = (1.0 - h) * (1.0 - h) * (1.0 - h);
  return 1.0 / (h * (1.0 - h)) + k2 / 3.0 - k2 * k2 * (h3 + g3) / 45.0;
}

double dispersion(double k, double h) {
  if (std::abs(k) < kDispersionSeriesSwitch) return dispersion_series(k, h);
  return k * (coth(k * h) + coth((1.0 - h) * k));
}

double dispersion_derivative(double k, double h) {
  if (std::abs(k) < kDispersionSeriesSwitch) {
    const double h3 = h * h * h;
    const double g3 = (1.0 - h) * (1.0 - h) * (1.0 - h);
    return 2.0 * k / 3.0 - 4.0 * k * k * k * (h3 + g3) / 45.0;
  }
  const double a = h * k, b = (1.0 - h) * k;
  const double sa = std::sinh(a), sb = std::sinh(b);
  return (std::sinh(2.0 * a) - 2.0 * a) / (2.0 * sa * sa) +
         (std::sinh(2.0 * b) - 2.0 * b) / (2.0 * sb * sb);
}

double p_coeff(double y, const Params& p, Layer layer) {
  const double cs = p.critical_c();
  const double omega = layer == Layer::lower ? p.omega0 : p.omega1();
  return ((1.0 - 2.0 * y) * (omega * (y - p.h) + cs) + y * (1.0 - y) * omega) /
         (p.h * (1.0 - p.h) * cs);
}

double p_coeff(double y, const Params& p) {
  return p_coeff(y, p, y < p.h ? Layer::lower : Layer::upper);
}

double p_coeff_deriv(double y, const Params& p, Layer layer) {
  const double cs = p.critical_c();
  const double omega = layer == Layer::lower ? p.omega0 : p.omega1();
  return 2.0 * (omega * (1.0 + p.h - 3.0 * y) - cs) / (p.h * (1.0 - p.h) * cs);
}

double p_coeff_deriv(double y, const Params& p) {
  return p_coeff_deriv(y, p, y < p.h ? Layer::lower : Layer::upper);
}

double KernelBasis::u_star(double y) const {
  const double cs = params.critical_c();
  if (y < params.h) return cs * (p_coeff(y, params, Layer::lower) - 1.0 / params.h);
  if (y > params.h) return cs * (p_coeff(y, params, Layer::upper) + 1.0 / (1.0 - params.h));
  return params.omega0 - params.h; // both one-sided limits
}

double KernelBasis::v_star(double y) const {
  const double cs = params.critical_c();
  return y <= params.h ? cs * y / params.h : cs * (1.0 - y) / (1.0 - params.h);
}

KernelBasis kernel_basis(const Params& p) {
  p.validate();
  return KernelBasis{p};
}

double proj_A_eta_coefficient(const Params& p) {
  // Determined by A(xi0) = 1 and A o L = B. The displayed coefficient is
  //   ((8h^4-15h^3+5h) w0 - (8g^4-15g^3+5g) w1) / (20 h^2 g^2),  g = 1-h.
  const double h = p.h, g = 1.0 - p.h;
  const double mh = 8.0 * h * h * h * h - 15.0 * h * h * h + 5.0 * h;
  const double mg = 8.0 * g * g * g * g - 15.0 * g * g * g + 5.0 * g;
  return (mh * p.omega0 - mg * p.omega1()) / (20.0 * h * h * g * g);
}

double proj_A(const std::function<double(double)>& u, double eta, const Params& p,
              int panels_per_layer) {
  const double h = p.h, g = 1.0 - p.h;
  const double lower = integrate([&](double y) { return y * y * u(y); }, 0.0, h,
                                 panels_per_layer);
  const double upper = integrate([&](double y) { return (1.0 - y) * (1.0 - y) * u(y); },
                                 h, 1.0, panels_per_layer);
  return 3.0 / (2.0 * h * h * g) * lower - 3.0 / (2.0 * h * g * g) * upper +
         proj_A_eta_coefficient(p) * eta;
}

double proj_B(const std::function<double(double)>& v, const Params& p,
              int panels_per_layer) {
  const double h = p.h, g = 1.0 - p.h;
  const double lower = integrate([&](double y) { return y * v(y); }, 0.0, h,
                                 panels_per_layer);
  const double upper = integrate([&](double y) { return (1.0 - y) * v(y); }, h, 1.0,
                                 panels_per_layer);
  return 3.0 / (h * h * g) * lower + 3.0 / (h * g * g) * upper;
}

std::pair<double, double> project_P0(const std::function<double(double)>& u,
                                     const std::function<double(double)>& v,
                                     double eta, const Params& p, int panels_per_layer) {
  return {proj_A(u, eta, p, panels_per_layer), proj_B(v, p, panels_per_layer)};
}

std::vector<std::pair<double, double>> dispersion_samples(double h, double kmin,
                                                          double kmax, int count) {
  std::vector<std::pair<double, double>> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double k = count == 1 ? kmin : kmin + (kmax - kmin) * i / (count - 1.0);
    out.emplace_back(k, dispersion(k, h));
  }
  return out;
}

SpectrumReport centre_spectrum_check(const Params& p, int n) {
  p.validate();
  if (n < 32) throw std::domain_error("centre_spectrum_check: n must be >= 32");

  using Eigen::MatrixXd;

  const double h = p.h, cs = p.critical_c();
  const double dy = 1.0 / n;
  const int jh = static_cast<int>(std::lround(h * n));
  if (jh < 4 || jh > n - 4)
    throw std::domain_error("centre_spectrum_check: interface too close to a wall");

  SpectrumReport rep;
  rep.n = n;
  rep.grid_misalignment = std::abs(jh * dy - h);

  // For z != 0 the kernel problem (L - z)(u, v, eta) = 0 eliminates u and
  // eta exactly (u = (p v(h) - v')/z, eta = v(h)/(z c*); the layer integral
  // constraints then hold automatically) and reduces to the scalar problem
  //
  //   v'' = -z^2 v  on (0,h) u (h,1),  v(0) = v(1) = 0,
  //   v'(h+) - v'(h-) = -v(h)/c*,
  //
  // i.e. a Dirichlet Laplacian plus a rank-one interface term, with
  // lambda = -z^2. The double zero of L corresponds to the simple
  // lambda = 0 whose eigenfunction is the tent v*. A direct discretization
  // of the full first-order system is spectrally unusable here: it carries
  // an exactly degenerate length-4 chain at zero whose rounding-noise
  // splitting swamps the centre spectrum.
  const int nv = n - 1; // v at interior nodes j dy, walls eliminated
  MatrixXd A = MatrixXd::Zero(nv, nv);
  const double idy2 = 1.0 / (dy * dy);
  for (int j = 1; j <= n - 1; ++j) {
    const int r = j - 1;
    A(r, r) = -2.0 * idy2;
    if (j - 1 >= 1) A(r, r - 1) = idy2;
    if (j + 1 <= n - 1) A(r, r + 1) = idy2;
  }
  // Interface row: the divided Laplacian equals [v']/dy + avg(v'') and the
  // jump condition supplies [v'] = -v(h)/c*. The jump sits on the nearest
  // grid node; its coefficient uses the snapped height so the assembled
  // operator is exactly the one for that geometry (the zero eigenvalue stays
  // exact, and the offset is reported as grid_misalignment).
  const double hs = jh * dy;
  A(jh - 1, jh - 1) += 1.0 / (hs * (1.0 - hs) * dy);

  Eigen::EigenSolver<MatrixXd> es(A, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("centre_spectrum_check: eigensolver failed");

  // lambda -> z pairs: z = +-sqrt(-lambda).
  std::vector<std::complex<double>> evs;
  evs.reserve(2 * nv);
  for (int i = 0; i < nv; ++i) {
    const std::complex<double> z = std::sqrt(-es.eigenvalues()(i));
    evs.push_back(z);
    evs.push_back(-z);
  }
  std::sort(evs.begin(), evs.end(), [](const auto& a, const auto& b) {
    return std::abs(a) < std::abs(b);
  });

  rep.smallest[0] = evs[0];
  rep.smallest[1] = evs[1];
  rep.smallest_moduli[0] = std::abs(evs[0]);
  rep.smallest_moduli[1] = std::abs(evs[1]);
  rep.pair_product_modulus = std::abs(evs[0]) * std::abs(evs[1]);

  // Spectral gap over the remainder, excluding real eigenvalues that satisfy
  // sin(hz) = sin((1-h)z) = 0 (possible for rational h; always real with
  // |z| > pi, so they do not affect the centre spectrum).
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 2; i < evs.size(); ++i) {
    const double re = evs[i].real(), im = evs[i].imag();
    const bool bad = std::abs(im) < 0.5 && std::abs(re) > std::numbers::pi &&
                     std::abs(std::sin(h * re)) < 0.05 &&
                     std::abs(std::sin((1.0 - h) * re)) < 0.05;
    if (bad) {
      ++rep.excluded_bad_count;
      continue;
    }
    gap = std::min(gap, std::abs(re));
  }
  rep.spectral_gap = gap;

  // Dense scan of the dispersion relation on [-50, 50].
  const int nk = 2000;
  double min_gap = std::numeric_limits<double>::infinity();
  bool monotone = true;
  double fd_err = 0.0;
  const double inv_cs = 1.0 / cs;
  for (int i = 0; i < nk; ++i) {
    const double k = -50.0 + 100.0 * (i + 0.5) / nk;
    if (std::abs(k) < 1e-9) continue;
    min_gap = std::min(min_gap, dispersion(k, h) - inv_cs);
    const double d = dispersion_derivative(k, h);
    if (d * k <= 0.0) monotone = false;
    const double step = 1e-6 * std::max(1.0, std::abs(k));
    const double fd = (dispersion(k + step, h) - dispersion(k - step, h)) / (2.0 * step);
    fd_err = std::max(fd_err, std::abs(fd - d) / std::max(1.0, std::abs(d)));
  }
  rep.dispersion_min_gap = min_gap;
  rep.dispersion_monotone = monotone;
  rep.dispersion_deriv_fd_max_err = fd_err;
  return rep;
}

} // namespace vortexfront
