#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>

namespace tradespace {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;
using Mat24 = Eigen::Matrix<double, 2, 4>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kGravity = 9.81;  // m/s^2, coordinated-turn relation

inline double deg2rad(double d) { return d * (kPi / 180.0); }
inline double rad2deg(double r) { return r * (180.0 / kPi); }

/// Wraps an angle to (-pi, pi].
double wrap_angle(double a);

/// Bad input files, flags, or scenario invariants. The CLI exits with code 2
/// for these and code 3 for anything else.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Nearly-constant-velocity discretization over the target state
// (x, y, vx, vy). `intensity` is the continuous-time noise intensity q.
Mat4 ncv_transition(double dt);
Mat4 ncv_process_noise(double intensity, double dt);
/// Lower-triangular square root of ncv_process_noise (closed form).
Mat4 ncv_process_noise_sqrt(double intensity, double dt);

/// Deterministic engine seeded from up to two words.
std::mt19937_64 make_rng(std::uint64_t a, std::uint64_t b = 0);

/// Uniform in [0, 1) taken straight from the engine's output bits, so the
/// stream is identical across standard library implementations.
double uniform01(std::mt19937_64& rng);
/// Standard normal via Box-Muller on uniform01 (two draws per call).
double normal01(std::mt19937_64& rng);

std::uint64_t fnv1a64(const void* data, std::size_t len,
                      std::uint64_t seed = 14695981039346656037ull);
std::uint64_t fnv1a64(const std::string& s,
                      std::uint64_t seed = 14695981039346656037ull);
std::string to_hex(std::uint64_t v);

/// Fixed-width shortest-round-trip formatting shared by every CSV/JSON
/// emitter so that reruns are byte-identical.
std::string format_double(double v);

// Log level comes from TRADESPACE_LOG (error, warn, info, debug).
enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };
LogLevel log_level();
void log_msg(LogLevel level, const std::string& msg);

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. Results must be
/// written to pre-sized slots; the call itself imposes no ordering.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace tradespace
