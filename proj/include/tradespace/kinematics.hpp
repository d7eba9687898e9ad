#pragma once

#include "tradespace/common.hpp"

#include <vector>

namespace tradespace {

/// Below this speed the heading is undefined; samplers hold the previous one.
inline constexpr double kSpeedEpsilon = 1e-6;

/// Bank-to-turn vehicle state at one instant. Coordinates are NED horizontal
/// plus a fixed height above the sea surface.
struct UavState {
  Vec2 position = Vec2::Zero();  // m
  double altitude = 0.0;         // m above sea surface
  double heading = 0.0;          // psi, rad
  double roll = 0.0;             // phi, rad
  double speed = 0.0;            // m/s
};

/// Planar Bernstein-basis position curve with fixed altitude. The curve is
/// parameterized on tau = t / duration; time derivatives are chain-rule
/// scaled by powers of 1 / duration.
struct TrajectorySpline {
  int degree = 0;
  std::vector<Vec2> control_points;  // degree + 1 entries
  double duration = 0.0;             // t_f, s
  double altitude = 0.0;             // m
};

/// Position (order 0), velocity (1) or acceleration (2) at time t in [0, t_f].
/// Derivatives use the forward-difference control-point form of the basis.
Vec2 bernstein_eval(const TrajectorySpline& traj, double t, int order);

struct FlatOutputs {
  UavState state;
  double curvature = 0.0;  // kappa, 1/m, signed
};

/// Recovers heading, roll and speed from the curve: psi = atan2(vy, vx),
/// kappa = (vx*ay - vy*ax) / |v|^3, phi = atan(kappa * |v|^2 / g).
/// Throws std::domain_error when |v| < kSpeedEpsilon.
FlatOutputs derive_flat_outputs(const TrajectorySpline& traj, double t,
                                double gravity = kGravity);

struct SampledTrajectory {
  std::vector<double> times;
  std::vector<Vec2> positions;
  std::vector<double> headings;
  std::vector<double> rolls;
  std::vector<double> speeds;
  double altitude = 0.0;
};

/// Evaluates the spline on a time grid. Degenerate-speed samples keep the
/// previous heading and zero roll instead of throwing.
SampledTrajectory sample_trajectory(const TrajectorySpline& traj,
                                    const std::vector<double>& times,
                                    double gravity = kGravity);

UavState state_at(const SampledTrajectory& traj, std::size_t k);

struct SpeedRollBand {
  double bank_limit = deg2rad(30.0);  // phi_max, rad
  double nominal_speed = 15.0;        // m/s
  double band_fraction = 0.10;        // allowed |speed - nominal| / nominal
};

/// Per-sample margins; positive means within limits. roll margin is
/// bank_limit - |phi|, speed margin is band - |speed - nominal|.
struct FeasibilityMargins {
  std::vector<double> roll_margins;
  std::vector<double> speed_margins;
  double worst_roll = 0.0;
  double worst_speed = 0.0;
};

FeasibilityMargins feasibility_margins(const TrajectorySpline& traj,
                                       const SpeedRollBand& band,
                                       const std::vector<double>& times);

/// Standard degree elevation; sampled positions are unchanged.
TrajectorySpline elevate_degree(const TrajectorySpline& traj);

/// Uniform grid {0, dt, 2dt, ...} with the final sample pinned to t_f.
std::vector<double> make_time_grid(double t_f, double dt);

}  // namespace tradespace
