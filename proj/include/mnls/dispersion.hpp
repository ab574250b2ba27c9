// dispersion.hpp
// Dispersion parameter block (alpha1, alpha2, p, mu) with the derived
// quantities recomputed on demand so they can never go stale.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace mnls {

template <typename Scalar = double>
struct DispersionParams {
  Scalar alpha1 = 2;  // order of the x-derivative, in (0,2] \ {1}
  Scalar alpha2 = 2;  // order of the y-derivative, alpha1 >= alpha2
  Scalar p = 3;       // nonlinearity power, > 1
  int mu = +1;        // +1 defocusing, -1 focusing

  // Anisotropy index entering the Sobolev weight (1 + xi^2 + |eta|^alpha).
  Scalar alpha() const { return Scalar(2) * alpha2 / alpha1; }
  Scalar beta1() const { return Scalar(1) - alpha1 / Scalar(2); }
  Scalar beta2() const { return Scalar(1) - alpha2 / Scalar(2); }
  // Scaling-critical Sobolev index.
  Scalar s_critical() const {
    return Scalar(0.5) + alpha1 / (Scalar(2) * alpha2) - alpha1 / (p - Scalar(1));
  }

  void validate() const {
    auto check_order = [](Scalar a, const char* name) {
      if (!(a > Scalar(0)) || a > Scalar(2) || a == Scalar(1))
        throw std::invalid_argument(std::string(name) +
                                    " must lie in (0,2] \\ {1}, got " +
                                    std::to_string(double(a)));
    };
    check_order(alpha1, "alpha1");
    check_order(alpha2, "alpha2");
    if (alpha1 < alpha2)
      throw std::invalid_argument("dispersion orders must satisfy alpha1 >= alpha2");
    if (!(p > Scalar(1)))
      throw std::invalid_argument("nonlinearity power p must be > 1");
    if (mu != 1 && mu != -1)
      throw std::invalid_argument("mu must be +1 or -1");
  }
};

template <typename Scalar = double>
DispersionParams<Scalar> make_params(Scalar alpha1, Scalar alpha2, Scalar p,
                                     int mu) {
  DispersionParams<Scalar> d{alpha1, alpha2, p, mu};
  d.validate();
  return d;
}

}  // namespace mnls
