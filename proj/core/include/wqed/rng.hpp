#pragma once

#include <cmath>
#include <cstdint>

namespace wqed {

// Small counter-based generator (splitmix64 applied to seed ^ f(counter)).
// Every draw is a pure function of (seed, counter), so results are identical
// across platforms and independent of call interleaving between threads as
// long as each consumer owns its counter range.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed ^ (0x9e3779b97f4a7c15ull * (stream + 1))), counter_(0) {}

  std::uint64_t next_u64() { return mix(seed_ + 0x9e3779b97f4a7c15ull * ++counter_); }

  // Uniform double in [0, 1) with 53 bits of mantissa.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform double in [0, scale).
  double uniform(double scale) { return scale * uniform(); }

  // Standard normal via Box-Muller (used by the Haar-state test oracle too,
  // so keep the draw order stable).
  double normal();

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

inline double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Rejection-free polar form would need a loop; the basic form is fine here.
  double u1 = uniform();
  double u2 = uniform();
  while (u1 <= 1e-300) u1 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 6.283185307179586476925286766559 * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

}  // namespace wqed
