#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "gft/jet.hpp"

namespace gft {

/// Uniform double in [0, 1) from the top 53 bits. Written out rather than
/// using std::uniform_real_distribution so sequences match across standard
/// libraries.
inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

/// Point uniform in angle with radius uniform in [r_lo, r_hi).
inline cplx random_annulus_point(std::mt19937_64& rng, double r_lo, double r_hi) {
  const double r = uniform(rng, r_lo, r_hi);
  const double t = 2.0 * std::numbers::pi * uniform01(rng);
  return std::polar(r, t);
}

/// Point uniform by area in the annulus r_lo <= |z| < r_hi.
inline cplx random_disk_point(std::mt19937_64& rng, double r_lo, double r_hi) {
  const double r = std::sqrt(uniform(rng, r_lo * r_lo, r_hi * r_hi));
  const double t = 2.0 * std::numbers::pi * uniform01(rng);
  return std::polar(r, t);
}

}  // namespace gft
