#pragma once

#include <vortexfront/wave.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vortexfront {

/// Vertical reflection to the frame with omega0 <= 1-h:
/// (h, omega0, omega1) -> (1-h, -omega1, -omega0), V changes sign and
/// Y -> 1-Y. Returns the (possibly reflected) parameters and whether the
/// reflection was applied.
std::pair<Params, bool> normalize_orientation(const Params& p);

/// Height of the critical layer U(X, .) = 0 in the upper layer, or absent
/// where U > 0 throughout (beyond X* in the bounded case). Requires the
/// normalized orientation omega0 <= 1-h. Bisection to 1e-12 in Y.
std::optional<double> critical_layer(const WaveField& w_normalized, double X);

/// Located stagnation points and critical-layer geometry, reported in the
/// original (unreflected) frame.
struct StagnationReport {
  double X = 0.0, Y = 0.0;  ///< interior stagnation point (X = 0 by symmetry)
  bool is_centre = false;   ///< centre vs saddle, from the Jacobian determinant
  StagnationLayer layer = StagnationLayer::upper;
  WaveProfile profile = WaveProfile::elevation;
  double det = 0.0;         ///< -V_X (omega1 + V_X) in the normalized frame

  bool bounded_case = false;           ///< omega0 = 1-h within tolerance
  double X_star = 0.0;                 ///< boundary saddles at (+-X_star, wall_Y)
  double wall_Y = 1.0;
  std::vector<std::pair<double, double>> critical_layer_curve; ///< sampled (X, Y*)
  bool critical_layer_bounded = false;

  int interior_cluster_count = 0;      ///< stagnation clusters found by sweep
  int wall_cluster_count = 0;
  bool reflected = false;              ///< analysis ran in the reflected frame
};

/// Locates the interior stagnation point at (0, Y*(0)), classifies it by the
/// sign of -V_X (omega1 + V_X) with V_X from centered finite differences, and
/// in the bounded case omega0 = 1-h also brackets X* with U(X*, wall) = 0 and
/// reports the two boundary saddles. Throws when theta = 0 or bracketing
/// fails.
StagnationReport find_stagnation(const WaveField& w);

struct TraceOptions {
  double step = 1e-3;          ///< arclength step
  double x_cut = 0.0;          ///< domain-exit bound; 0 = 1.2 x default window
  double speed_floor = 1e-8;   ///< stagnation-approach threshold
  long max_steps = 1000000;
  bool backward = false;       ///< integrate against the flow
  bool project = true;         ///< re-project onto the Psi level each step
};

struct Streamline {
  enum class Termination {
    closed_orbit,
    domain_exit,
    stagnation_approach,
    wall_attachment,
    step_limit
  };
  struct Point {
    double X, Y, psi;
  };
  std::vector<Point> points;
  double psi_level = 0.0;
  Termination termination = Termination::step_limit;
  double max_psi_drift = 0.0;
};

std::string to_string(Streamline::Termination t);

/// RK4 integration of the unit-speed field (U, V)/|(U, V)| from the seed,
/// with a Newton correction back onto the seed's Psi level after each step
/// (streamlines are level sets; the raw approximant fields alone would drift
/// at the order of the kinematic defect). Terminates on orbit closure,
/// domain exit, speed below the stagnation floor, or wall contact. Throws on
/// a zero-speed seed.
Streamline trace_streamline(const WaveField& w, double X0, double Y0,
                            const TraceOptions& opts = {});

/// The streamline connecting the two boundary saddles in the bounded case,
/// traced on the Psi(X*, wall) level from a seed offset inward from
/// (-X*, wall) along the proof's diagonal cone. Throws outside the bounded
/// case.
Streamline attached_streamline(const WaveField& w);

struct PortraitOptions {
  int nx = 241;
  int ny = 121;
  int levels = 24;
  double x_window = 10.0;
};

/// Contour set reproducing the qualitative flow portrait: Psi contours by
/// marching squares, the interface curve, the critical layer, and the
/// stagnation report.
struct Portrait {
  struct Curve {
    int id = 0;
    std::string kind; ///< streamline | interface | critical_layer
    std::vector<Streamline::Point> points;
  };
  std::vector<Curve> curves;
  bool has_stagnation = false; ///< false for the shear (eps = 0): the whole
                               ///< critical layer stagnates, no isolated point
  StagnationReport stagnation;
  int requested_levels = 0;
  int nonempty_levels = 0;
};

Portrait portrait(const WaveField& w, const PortraitOptions& opts = {});

/// Grid verification of the sign laws sign(eta') = sign(theta X) and
/// sign(V) = sign(theta X). The V check runs on an interior grid that stays
/// wall_margin away from the walls, where the approximant's own error
/// budget overwhelms the tiny V values.
struct SignCheckReport {
  long eta_checked = 0, eta_violations = 0;
  long v_checked = 0, v_violations = 0;
  double worst_eta_X = 0.0;
  double worst_v_X = 0.0, worst_v_Y = 0.0;
};

SignCheckReport sign_checks(const WaveField& w, int nx = 400, int ny = 200,
                            double x_window = 10.0, double wall_margin = 0.05);

} // namespace vortexfront
