// random_fields.hpp
// Seeded random smooth fields: independent complex Gaussian spectral
// coefficients under a smooth decay envelope. Coefficients are keyed by the
// signed mode index, so refining the grid extends a field with new high
// modes without redrawing the low ones, and every draw is reproducible
// bit-for-bit from the seed.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "mnls/grid.hpp"

namespace mnls {

namespace detail {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Two standard normals from one 64-bit key (Box-Muller on fixed-point
// uniforms; bit-deterministic across platforms).
inline std::pair<double, double> gaussian_pair(uint64_t key) {
  const uint64_t a = splitmix64(key);
  const uint64_t b = splitmix64(a ^ 0xD1B54A32D192ED03ULL);
  const double u1 = (double(a >> 11) + 0.5) * 0x1.0p-53;
  const double u2 = double(b >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double th = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(th), r * std::sin(th)};
}

}  // namespace detail

// Complex field with spectrum amp * exp(-(xi/xi_width)^2 - (eta/eta_width)^2)
// * (standard complex Gaussian per mode), returned in physical space and
// normalized to unit L^2 before the amplitude factor.
template <typename Scalar = double>
Field2D<Scalar> random_smooth_field(GridPtr<Scalar> grid, uint64_t seed,
                                    Scalar xi_width = Scalar(2),
                                    Scalar eta_width = Scalar(2),
                                    Scalar amplitude = Scalar(1)) {
  Field2D<Scalar> s(grid, Space::Spectral);
  for (int k = 0; k < grid->ny; ++k) {
    const int ks = (k < grid->ny / 2) ? k : k - grid->ny;
    for (int i = 0; i < grid->nx; ++i) {
      const int is = (i < grid->nx / 2) ? i : i - grid->nx;
      const uint64_t key = detail::splitmix64(seed) ^
                           (uint64_t(uint32_t(is)) << 32 | uint64_t(uint32_t(ks)));
      auto [g1, g2] = detail::gaussian_pair(key);
      const Scalar env = std::exp(-std::pow(grid->xi[i] / xi_width, 2) -
                                  std::pow(grid->eta[k] / eta_width, 2));
      s.data(i, k) = env * std::complex<Scalar>(Scalar(g1), Scalar(g2)) /
                     std::numbers::sqrt2_v<Scalar>;
    }
  }
  const Scalar n = l2_norm(s);
  if (n > 0) s.data *= amplitude / n;
  return to_physical(s);
}

}  // namespace mnls
