// quadrature.hpp
// Small quadrature toolbox shared by the oracle modules: adaptive Simpson
// with absolute-error control and a fixed 15-point Gauss-Legendre panel.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace mnls {

namespace detail {

template <typename F, typename V>
V adaptive_simpson_rec(const F& f, double a, double c, double b, V fa, V fc,
                       V fb, V whole, double tol, int depth) {
  const double d = 0.5 * (a + c), e = 0.5 * (c + b);
  const V fd = f(d), fe = f(e);
  const V left = (fa + 4.0 * fd + fc) * ((c - a) / 6.0);
  const V right = (fc + 4.0 * fe + fb) * ((b - c) / 6.0);
  const V delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson_rec(f, a, d, c, fa, fd, fc, left, 0.5 * tol,
                              depth - 1) +
         adaptive_simpson_rec(f, c, e, b, fc, fe, fb, right, 0.5 * tol,
                              depth - 1);
}

}  // namespace detail

// Adaptive Simpson on [a,b]; V may be double or std::complex<double>.
template <typename F,
          typename V = decltype(std::declval<F>()(0.0))>
V adaptive_simpson(const F& f, double a, double b, double tol = 1e-10,
                   int max_depth = 40) {
  if (a == b) return V{};
  const double c = 0.5 * (a + b);
  const V fa = f(a), fb = f(b), fc = f(c);
  const V whole = (fa + 4.0 * fc + fb) * ((b - a) / 6.0);
  return detail::adaptive_simpson_rec(f, a, c, b, fa, fc, fb, whole, tol,
                                      max_depth);
}

// 15-point Gauss-Legendre nodes/weights on [-1,1].
struct GaussLegendre15 {
  static constexpr std::array<double, 15> nodes = {
      -0.9879925180204854, -0.9372733924007060, -0.8482065834104272,
      -0.7244177313601701, -0.5709721726085388, -0.3941513470775634,
      -0.2011940939974345, 0.0,                 0.2011940939974345,
      0.3941513470775634,  0.5709721726085388,  0.7244177313601701,
      0.8482065834104272,  0.9372733924007060,  0.9879925180204854};
  static constexpr std::array<double, 15> weights = {
      0.0307532419961173, 0.0703660474881081, 0.1071592204671719,
      0.1395706779261543, 0.1662692058169939, 0.1861610000155622,
      0.1984314853271116, 0.2025782419255613, 0.1984314853271116,
      0.1861610000155622, 0.1662692058169939, 0.1395706779261543,
      0.1071592204671719, 0.0703660474881081, 0.0307532419961173};
};

template <typename F, typename V = decltype(std::declval<F>()(0.0))>
V gauss15(const F& f, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  V acc{};
  for (int k = 0; k < 15; ++k)
    acc += GaussLegendre15::weights[k] * f(mid + half * GaussLegendre15::nodes[k]);
  return acc * half;
}

}  // namespace mnls
