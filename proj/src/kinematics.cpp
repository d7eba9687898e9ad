#include "tradespace/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace tradespace {

namespace {

Vec2 de_casteljau(std::vector<Vec2> pts, double tau) {
  for (std::size_t m = pts.size(); m > 1; --m) {
    for (std::size_t i = 0; i + 1 < m; ++i) {
      pts[i] = (1.0 - tau) * pts[i] + tau * pts[i + 1];
    }
  }
  return pts.front();
}

void check_spline(const TrajectorySpline& traj) {
  if (traj.degree < 0 || traj.control_points.size() != static_cast<std::size_t>(traj.degree) + 1)
    throw std::invalid_argument("spline: control point count does not match degree");
  if (traj.duration <= 0.0) throw std::invalid_argument("spline: duration must be positive");
}

}  // namespace

Vec2 bernstein_eval(const TrajectorySpline& traj, double t, int order) {
  check_spline(traj);
  if (order < 0 || order > 2) throw std::invalid_argument("bernstein_eval: order must be 0..2");
  if (t < 0.0 || t > traj.duration)
    throw std::out_of_range("bernstein_eval: t outside [0, t_f]");

  const double tau = t / traj.duration;
  std::vector<Vec2> pts = traj.control_points;
  double scale = 1.0;
  for (int d = 0; d < order; ++d) {
    const int n = static_cast<int>(pts.size()) - 1;
    if (n < 1) return Vec2::Zero();
    std::vector<Vec2> diff(n);
    for (int i = 0; i < n; ++i) diff[i] = static_cast<double>(n) * (pts[i + 1] - pts[i]);
    pts = std::move(diff);
    scale /= traj.duration;
  }
  return scale * de_casteljau(std::move(pts), tau);
}

FlatOutputs derive_flat_outputs(const TrajectorySpline& traj, double t, double gravity) {
  const Vec2 vel = bernstein_eval(traj, t, 1);
  const Vec2 acc = bernstein_eval(traj, t, 2);
  const double speed = vel.norm();
  if (speed < kSpeedEpsilon)
    throw std::domain_error("derive_flat_outputs: degenerate speed");
  const double kappa = (vel.x() * acc.y() - vel.y() * acc.x()) / (speed * speed * speed);
  FlatOutputs out;
  out.state.position = bernstein_eval(traj, t, 0);
  out.state.altitude = traj.altitude;
  out.state.heading = std::atan2(vel.y(), vel.x());
  out.state.roll = std::atan(kappa * speed * speed / gravity);
  out.state.speed = speed;
  out.curvature = kappa;
  return out;
}

SampledTrajectory sample_trajectory(const TrajectorySpline& traj,
                                    const std::vector<double>& times, double gravity) {
  check_spline(traj);
  SampledTrajectory out;
  out.altitude = traj.altitude;
  out.times = times;
  out.positions.reserve(times.size());
  out.headings.reserve(times.size());
  out.rolls.reserve(times.size());
  out.speeds.reserve(times.size());
  double prev_heading = 0.0;
  for (double t : times) {
    const Vec2 vel = bernstein_eval(traj, t, 1);
    const Vec2 acc = bernstein_eval(traj, t, 2);
    const double speed = vel.norm();
    double heading = prev_heading;
    double roll = 0.0;
    if (speed >= kSpeedEpsilon) {
      heading = std::atan2(vel.y(), vel.x());
      const double kappa = (vel.x() * acc.y() - vel.y() * acc.x()) / (speed * speed * speed);
      roll = std::atan(kappa * speed * speed / gravity);
    }
    out.positions.push_back(bernstein_eval(traj, t, 0));
    out.headings.push_back(heading);
    out.rolls.push_back(roll);
    out.speeds.push_back(speed);
    prev_heading = heading;
  }
  return out;
}

UavState state_at(const SampledTrajectory& traj, std::size_t k) {
  UavState s;
  s.position = traj.positions.at(k);
  s.altitude = traj.altitude;
  s.heading = traj.headings.at(k);
  s.roll = traj.rolls.at(k);
  s.speed = traj.speeds.at(k);
  return s;
}

FeasibilityMargins feasibility_margins(const TrajectorySpline& traj,
                                       const SpeedRollBand& band,
                                       const std::vector<double>& times) {
  const SampledTrajectory sampled = sample_trajectory(traj, times);
  FeasibilityMargins out;
  out.roll_margins.reserve(times.size());
  out.speed_margins.reserve(times.size());
  out.worst_roll = std::numeric_limits<double>::infinity();
  out.worst_speed = std::numeric_limits<double>::infinity();
  const double band_abs = band.band_fraction * band.nominal_speed;
  for (std::size_t k = 0; k < times.size(); ++k) {
    const double rm = band.bank_limit - std::abs(sampled.rolls[k]);
    const double sm = band_abs - std::abs(sampled.speeds[k] - band.nominal_speed);
    out.roll_margins.push_back(rm);
    out.speed_margins.push_back(sm);
    out.worst_roll = std::min(out.worst_roll, rm);
    out.worst_speed = std::min(out.worst_speed, sm);
  }
  return out;
}

TrajectorySpline elevate_degree(const TrajectorySpline& traj) {
  check_spline(traj);
  const int m = traj.degree + 1;
  TrajectorySpline out;
  out.degree = m;
  out.duration = traj.duration;
  out.altitude = traj.altitude;
  out.control_points.resize(m + 1);
  out.control_points.front() = traj.control_points.front();
  out.control_points.back() = traj.control_points.back();
  for (int i = 1; i < m; ++i) {
    const double w = static_cast<double>(i) / m;
    out.control_points[i] = w * traj.control_points[i - 1] + (1.0 - w) * traj.control_points[i];
  }
  return out;
}

std::vector<double> make_time_grid(double t_f, double dt) {
  if (t_f <= 0.0) throw std::invalid_argument("make_time_grid: t_f must be positive");
  if (dt <= 0.0) throw std::invalid_argument("make_time_grid: dt must be positive");
  std::vector<double> grid;
  grid.push_back(0.0);
  for (double t = dt; t < t_f - 1e-9; t += dt) grid.push_back(t);
  grid.push_back(t_f);
  return grid;
}

}  // namespace tradespace
