#include "tradespace/common.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <thread>
#include <vector>

namespace tradespace {

double wrap_angle(double a) {
  double w = std::fmod(a + kPi, 2.0 * kPi);
  if (w <= 0.0) w += 2.0 * kPi;
  return w - kPi;
}

Mat4 ncv_transition(double dt) {
  Mat4 f = Mat4::Identity();
  f(0, 2) = dt;
  f(1, 3) = dt;
  return f;
}

Mat4 ncv_process_noise(double intensity, double dt) {
  const double a = intensity * dt * dt * dt / 3.0;
  const double b = intensity * dt * dt / 2.0;
  const double c = intensity * dt;
  Mat4 q = Mat4::Zero();
  q(0, 0) = q(1, 1) = a;
  q(2, 2) = q(3, 3) = c;
  q(0, 2) = q(2, 0) = b;
  q(1, 3) = q(3, 1) = b;
  return q;
}

Mat4 ncv_process_noise_sqrt(double intensity, double dt) {
  // Cholesky of the 2x2 block pattern [[a,b],[b,c]] (x) I2.
  Mat4 l = Mat4::Zero();
  if (intensity <= 0.0 || dt <= 0.0) return l;
  const double sq = std::sqrt(intensity);
  const double l11 = sq * std::sqrt(dt * dt * dt / 3.0);
  const double l21 = sq * std::sqrt(dt) * (std::sqrt(3.0) / 2.0);
  const double l22 = sq * std::sqrt(dt) / 2.0;
  l(0, 0) = l(1, 1) = l11;
  l(2, 0) = l(3, 1) = l21;
  l(2, 2) = l(3, 3) = l22;
  return l;
}

std::mt19937_64 make_rng(std::uint64_t a, std::uint64_t b) {
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return std::mt19937_64(seq);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double normal01(std::mt19937_64& rng) {
  const double u1 = 1.0 - uniform01(rng);  // (0, 1]
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t fnv1a64(const std::string& s, std::uint64_t seed) {
  return fnv1a64(s.data(), s.size(), seed);
}

std::string to_hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("TRADESPACE_LOG");
    if (env == nullptr) return LogLevel::Warn;
    if (std::strcmp(env, "error") == 0) return LogLevel::Error;
    if (std::strcmp(env, "warn") == 0) return LogLevel::Warn;
    if (std::strcmp(env, "info") == 0) return LogLevel::Info;
    if (std::strcmp(env, "debug") == 0) return LogLevel::Debug;
    return LogLevel::Warn;
  }();
  return level;
}

void log_msg(LogLevel level, const std::string& msg) {
  static const char* names[] = {"error", "warn", "info", "debug"};
  if (static_cast<int>(level) > static_cast<int>(log_level())) return;
  std::fprintf(stderr, "[tradespace:%s] %s\n", names[static_cast<int>(level)], msg.c_str());
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  const int workers = std::max(1, jobs);
  if (workers == 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  pool.reserve(count);
  for (std::size_t w = 0; w < count; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace tradespace
