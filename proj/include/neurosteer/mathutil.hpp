// Small numeric helpers shared across the simulator.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

namespace neurosteer {

inline constexpr double kPi = std::numbers::pi;

// Odd/even-enforced trig wrappers. libm does not guarantee sin(-x) == -sin(x)
// bitwise; the mirror-symmetry invariant of the closed loop does, so all pose
// math goes through these.
inline double sin_sym(double x) {
    const double s = std::sin(std::fabs(x));
    return std::signbit(x) ? -s : s;
}

inline double cos_sym(double x) { return std::cos(std::fabs(x)); }

// Wrap to (-pi, pi]. Loop form keeps wrap(-x) == -wrap(x) bitwise away from
// the boundary; inputs here are always within a few turns of zero.
inline double wrap_angle(double a) {
    while (a > kPi) a -= 2.0 * kPi;
    while (a < -kPi) a += 2.0 * kPi;
    return a;
}

inline double clamp_abs(double x, double limit) {
    if (x > limit) return limit;
    if (x < -limit) return -limit;
    return x;
}

// Van der Corput radical inverse; the Halton sequence over the first four
// prime bases drives low-discrepancy sampling of the controller input box.
double radical_inverse(std::uint64_t index, std::uint32_t base);

// dim < 4. index 0 maps to the box interior, not a corner.
double halton(std::uint64_t index, std::uint32_t dim);

// Deterministic uniform doubles from mt19937_64 bits. std::uniform_real_distribution
// is implementation-defined, so tests and tools draw through this instead.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next_u64();
    double uniform();  // [0, 1)
    double uniform(double lo, double hi);

  private:
    std::uint64_t state_;
};

// Static-partition parallel map over [0, n). Each index writes only its own
// output slot, so results are identical for any thread count. Honors the
// NEUROSTEER_THREADS cap.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

std::size_t thread_budget();

}  // namespace neurosteer
