// oscillatory_kernel.hpp
// Oscillatory kernel K(y) = int_R exp(-i|eta|^alpha + i y eta)
// |eta|^{-beta(1+i mu)} d eta, the one-dimensional factor behind the
// weighted fixed-time dispersive bound.
//
// Batched evaluator: the line splits into
//   * a central window [-delta, delta] handled per y by adaptive quadrature
//     in log coordinates (integrable |eta|^{-beta} singularity),
//   * a resolved band [delta, Omega] sampled once on a uniform lattice fine
//     enough for the worst local frequency alpha*Omega^(alpha-1) + y_max,
//     then summed per y with an exact phase recurrence,
//   * an analytic tail beyond Omega: two integrations by parts in the
//     variable u = eta^alpha, where the phase derivative stays away from 0
//     once Omega clears the stationary point (y/alpha)^(1/(alpha-1)) by a
//     dyadic factor.
//
// A panel-marching direct evaluator (panel length ~ 1/(1+|phase'|), split at
// the stationary point) serves as the slow cross-check for moderate y.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "mnls/errors.hpp"
#include "mnls/quadrature.hpp"

namespace mnls {

struct KernelKResult {
  std::vector<double> y;
  std::vector<std::complex<double>> values;
  double eta_cutoff = 0;
};

namespace detail {

using Cd = std::complex<double>;
constexpr Cd kI{0.0, 1.0};

// g(eta) = eta^{-beta(1+i mu)} on eta > 0.
inline Cd amp(double eta, double beta, double mu) {
  return std::exp(-beta * Cd(1.0, mu) * std::log(eta));
}

// Central piece: int_0^delta e^{-i eta^alpha} g(eta) (e^{iw eta}) d eta via
// eta = e^v; the amplitude carries e^{(1-beta)v} so the lower limit is
// truncated where its integral falls below tolerance.
inline Cd kernel_k_central_oneside(double alpha, double beta, double mu,
                                   double w, double delta) {
  const double one_minus_beta = 1.0 - beta;  // = alpha/2 > 0
  const double v_min = std::log(1e-13 * one_minus_beta) / one_minus_beta;
  auto f = [&](double v) -> Cd {
    const double eta = std::exp(v);
    const Cd phase = std::exp(Cd(0.0, -std::pow(eta, alpha) + w * eta));
    const Cd a = std::exp(Cd(one_minus_beta * v, -beta * mu * v));
    return phase * a;
  };
  return adaptive_simpson(f, v_min, std::log(delta), 1e-11);
}

// Two-term integration-by-parts tail beyond Omega in u = eta^alpha:
//   int_U^inf G(u) e^{iP(u)} du,  G = (1/alpha) u^{c-1},
//   c = (1 - beta(1+i mu))/alpha,  P = -u + w u^{1/alpha}.
inline Cd kernel_k_tail(double alpha, double beta, double mu, double w,
                        double omega) {
  const double U = std::pow(omega, alpha);
  const double ia = 1.0 / alpha;
  const Cd c = (1.0 - beta * Cd(1.0, mu)) * ia;
  const Cd G = ia * std::exp((c - 1.0) * std::log(U));
  const Cd Gp = G * (c - 1.0) / U;
  const double P = -U + w * std::pow(U, ia);
  const double Pp = -1.0 + (w * ia) * std::pow(U, ia - 1.0);
  const double Ppp = (w * ia) * (ia - 1.0) * std::pow(U, ia - 2.0);
  if (std::abs(Pp) < 0.3)
    throw NumericalError(
        "kernel_k: stationary point too close to the cutoff; raise eta_cutoff");
  const Cd eiP = std::exp(kI * P);
  return eiP * (kI * G / Pp - (Gp * Pp - G * Ppp) / (Pp * Pp * Pp));
}

}  // namespace detail

// Batched K(y) for y_list, alpha in (0,2] \ {1}. beta follows the weighted
// estimate's usage beta = 1 - alpha/2 (asserted loosely: any beta in (0,1)
// works). eta_cutoff <= 0 selects an automatic cutoff past every stationary
// point; pass an explicit value to probe cutoff stability.
inline KernelKResult kernel_k_oracle(double alpha, double beta, double mu,
                                     const std::vector<double>& y_list,
                                     double eta_cutoff = 0.0) {
  if (!(alpha > 0.0) || alpha > 2.0 || alpha == 1.0)
    throw std::invalid_argument("kernel_k: alpha must lie in (0,2] \\ {1}");
  if (!(beta > 0.0) || beta >= 1.0)
    throw std::invalid_argument("kernel_k: beta must lie in (0,1)");

  double y_max = 1.0;
  for (double y : y_list) y_max = std::max(y_max, std::abs(y));

  double omega = eta_cutoff;
  if (omega <= 0.0) {
    omega = 50.0;
    if (alpha > 1.0)
      omega = std::max(omega, std::pow(2.0 * y_max / alpha, 1.0 / (alpha - 1.0)));
    else
      omega = std::max(omega, 2e4);
  }

  const double delta = 0.25;
  // Lattice resolving the largest local frequency |phase'| on [delta,Omega].
  const double f_max = (alpha > 1.0)
                           ? alpha * std::pow(omega, alpha - 1.0) + y_max
                           : alpha * std::pow(delta, alpha - 1.0) + y_max;
  const double h = 2.0 * std::numbers::pi / (8.0 * f_max);
  const auto m_count = size_t((omega - delta) / h) + 1;

  std::vector<detail::Cd> samples(m_count);
  for (size_t j = 0; j < m_count; ++j) {
    const double eta = delta + (double(j) + 0.5) * h;
    samples[j] = std::exp(detail::Cd(0.0, -std::pow(eta, alpha))) *
                 detail::amp(eta, beta, mu);
  }
  const double omega_eff = delta + double(m_count) * h;

  KernelKResult res;
  res.eta_cutoff = omega_eff;
  res.y.assign(y_list.begin(), y_list.end());
  res.values.resize(y_list.size());

  for (size_t iy = 0; iy < y_list.size(); ++iy) {
    const double y = y_list[iy];
    detail::Cd total(0.0, 0.0);
    for (double w : {y, -y}) {
      // Resolved band, midpoint rule with multiplicative phase recurrence.
      const detail::Cd step = std::exp(detail::Cd(0.0, w * h));
      detail::Cd phase = std::exp(detail::Cd(0.0, w * (delta + 0.5 * h)));
      detail::Cd acc(0.0, 0.0);
      for (size_t j = 0; j < m_count; ++j) {
        acc += samples[j] * phase;
        phase *= step;
        if ((j & 0xFFF) == 0xFFF)
          phase = std::exp(detail::Cd(0.0, w * (delta + (double(j) + 1.5) * h)));
      }
      total += acc * h;
      total += detail::kernel_k_central_oneside(alpha, beta, mu, w, delta);
      total += detail::kernel_k_tail(alpha, beta, mu, w, omega_eff);
      if (w == 0.0) break;  // y = 0: both sides coincide
    }
    if (y == 0.0) total *= 2.0;
    res.values[iy] = total;
  }
  return res;
}

// Direct single-y evaluation by stationary-point splitting and marching
// Gauss-Legendre panels with length ~ 1/(1 + |phase'|); cross-check path,
// practical for moderate |y|.
inline std::complex<double> kernel_k_direct(double alpha, double beta,
                                            double mu, double y,
                                            double eta_cutoff = 0.0) {
  double omega = eta_cutoff;
  if (omega <= 0.0) {
    omega = 50.0;
    if (alpha > 1.0)
      omega = std::max(omega,
                       std::pow(2.0 * std::abs(y) / alpha, 1.0 / (alpha - 1.0)));
    else
      omega = std::max(omega, 2e4);
  }
  const double delta = 0.25;
  detail::Cd total(0.0, 0.0);
  for (double w : {y, -y}) {
    auto integrand = [&](double eta) -> detail::Cd {
      return std::exp(detail::Cd(0.0, -std::pow(eta, alpha) + w * eta)) *
             detail::amp(eta, beta, mu);
    };
    auto phase_deriv = [&](double eta) {
      return -alpha * std::pow(eta, alpha - 1.0) + w;
    };
    detail::Cd acc(0.0, 0.0);
    double a = delta;
    while (a < omega) {
      const double hp = std::min(
          {2.0 * std::numbers::pi / (6.0 * (std::abs(phase_deriv(a)) + 0.2)),
           0.5 * a + 0.05, omega - a});
      acc += gauss15(integrand, a, a + hp);
      a += hp;
    }
    total += acc;
    total += detail::kernel_k_central_oneside(alpha, beta, mu, w, delta);
    total += detail::kernel_k_tail(alpha, beta, mu, w, omega);
    if (w == 0.0) break;
  }
  if (y == 0.0) total *= 2.0;
  return total;
}

}  // namespace mnls
