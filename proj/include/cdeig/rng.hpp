#pragma once

#include <cmath>
#include <cstdint>

#include "cdeig/element.hpp"

namespace cdeig {

/// SplitMix64 sequence.  The exact integer stream is part of the tool's
/// reproducibility contract (see README for frozen test vectors), so this
/// stays hand-rolled instead of delegating to <random>.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller on consecutive outputs a, b:
  ///   u1 = ((a >> 11) + 1) * 2^-53   (in (0, 1], so log is safe)
  ///   u2 = (b >> 11) * 2^-53
  ///   first draw  = sqrt(-2 ln u1) * cos(2 pi u2)
  ///   second draw = sqrt(-2 ln u1) * sin(2 pi u2)
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

 private:
  uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// Seed for trial t of a batch: the (t+1)-th output of a master SplitMix64
/// stream seeded with `seed`.  Keeps trials independent and order-free.
inline uint64_t trial_seed(uint64_t seed, int trial) {
  SplitMix64 master(seed);
  uint64_t s = 0;
  for (int k = 0; k <= trial; ++k) s = master.next_u64();
  return s;
}

/// Element with independent standard-normal coordinates.
inline CDElement random_element(int level, SplitMix64& rng) {
  CDElement x = zero_element(level);
  for (double& c : x.coeffs) c = rng.next_normal();
  return x;
}

inline CDElement random_imaginary(int level, SplitMix64& rng) {
  CDElement x = random_element(level, rng);
  x[0] = 0.0;
  return x;
}

/// Normal sample from C_n^perp (both the 1 and i_n coordinates zeroed).
inline CDElement random_c_perp(int level, SplitMix64& rng) {
  CDElement x = random_element(level, rng);
  x[0] = 0.0;
  x[x.dim() / 2] = 0.0;
  return x;
}

/// Unit-norm version of `gen(rng)`; redraws in the (measure-zero) tiny-norm case.
template <typename Gen>
CDElement random_unit(SplitMix64& rng, Gen gen) {
  for (;;) {
    CDElement x = gen(rng);
    const double n = norm(x);
    if (n > 1e-6) return (1.0 / n) * x;
  }
}

inline ComplexScalar random_complex(SplitMix64& rng) { return {rng.next_normal(), rng.next_normal()}; }

}  // namespace cdeig
