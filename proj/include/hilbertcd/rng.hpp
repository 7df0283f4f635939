#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace hilbertcd {

/// Seedable generator with fixed derivations for every draw the library
/// makes.  The engine is std::mt19937_64, whose output sequence the C++
/// standard pins down exactly; uniform and normal variates are derived below
/// rather than through std::*_distribution (whose algorithms vary across
/// standard libraries), so a seed reproduces the same stream everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1), 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller; draws two uniforms per pair.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));  // 1-u1 in (0,1]
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
  }

  /// Uniform integer in [0, bound); bound >= 1.  The floor(u*bound)
  /// derivation carries a bias below 2^-53 per draw, which is irrelevant
  /// here and keeps the stream consumption fixed at one draw.
  std::uint64_t index(std::uint64_t bound) {
    const auto v = static_cast<std::uint64_t>(uniform01() *
                                              static_cast<double>(bound));
    return v < bound ? v : bound - 1;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace hilbertcd
