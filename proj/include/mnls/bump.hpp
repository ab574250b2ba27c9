// bump.hpp
// Smooth dyadic cutoffs: psi is an even C^inf bump equal to 1 on [-1,1] and
// supported in (-2,2); phi(r) = psi(r) - psi(2r) is supported in
// {1/2 <= |r| <= 2} and telescopes to a dyadic partition of unity,
// sum_{N in 2^Z} phi(r/N) = 1 for every r > 0.
//
// Construction: psi(r) = th(2-|r|) / (th(2-|r|) + th(|r|-1)) with
// th(t) = exp(-1/t) for t > 0 and 0 otherwise.
#pragma once

#include <cmath>

namespace mnls {

template <typename Scalar = double>
struct LPBump {
  static Scalar theta(Scalar t) {
    return t > Scalar(0) ? std::exp(-Scalar(1) / t) : Scalar(0);
  }

  static Scalar psi(Scalar r) {
    const Scalar a = std::abs(r);
    if (a <= Scalar(1)) return Scalar(1);
    if (a >= Scalar(2)) return Scalar(0);
    const Scalar up = theta(Scalar(2) - a);
    const Scalar down = theta(a - Scalar(1));
    return up / (up + down);
  }

  static Scalar phi(Scalar r) { return psi(r) - psi(Scalar(2) * r); }
};

}  // namespace mnls
