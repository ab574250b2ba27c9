// linear_flow.hpp
// Free propagator U(t) = exp(-it(|xi|^a1 + |eta|^a2)) and the measurements
// built on it: frequency-localized sup-norm decay, weighted space-time
// (Strichartz) quotients, and the two-flow phase-decoherence pairing.
#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "mnls/dispersion.hpp"
#include "mnls/errors.hpp"
#include "mnls/grid.hpp"
#include "mnls/multipliers.hpp"

namespace mnls {

// Time/space exponent pair with 1/q + 1/r = 1/2.
template <typename Scalar = double>
struct AdmissiblePair {
  Scalar q, r;

  AdmissiblePair(Scalar q_, Scalar r_) : q(q_), r(r_) {
    if (!(q > Scalar(2)))
      throw std::invalid_argument("AdmissiblePair: q must lie in (2, inf]");
    if (!(r >= Scalar(2)) || std::isinf(r))
      throw std::invalid_argument("AdmissiblePair: r must lie in [2, inf)");
    const Scalar lhs = (std::isinf(q) ? Scalar(0) : Scalar(1) / q) + Scalar(1) / r;
    if (std::abs(lhs - Scalar(0.5)) > Scalar(1e-12))
      throw std::invalid_argument("AdmissiblePair: 1/q + 1/r must equal 1/2");
  }

  static AdmissiblePair from_q(Scalar q) {
    return AdmissiblePair(q, Scalar(1) / (Scalar(0.5) - Scalar(1) / q));
  }
};

// Spectral phase array for U(t)/t; propagate multiplies by exp(-i t phase).
template <typename Scalar>
Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic> dispersion_phase(
    const Grid2D<Scalar>& g, const DispersionParams<Scalar>& params) {
  Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic> ph(g.nx, g.ny);
  for (int j = 0; j < g.ny; ++j) {
    const Scalar ey = std::pow(std::abs(g.eta[j]), params.alpha2);
    for (int i = 0; i < g.nx; ++i)
      ph(i, j) = std::pow(std::abs(g.xi[i]), params.alpha1) + ey;
  }
  return ph;
}

// U(t): modulus-one multiplier, exactly unitary on the discrete L^2 norm.
template <typename Scalar>
Field2D<Scalar> propagate(const Field2D<Scalar>& f,
                          const DispersionParams<Scalar>& params, Scalar t) {
  if (t == Scalar(0)) return f;
  const std::complex<Scalar> mi(0, -1);
  return apply_multiplier(f, [&](Scalar xi, Scalar eta) {
    const Scalar ph = std::pow(std::abs(xi), params.alpha1) +
                      std::pow(std::abs(eta), params.alpha2);
    return std::exp(mi * (t * ph));
  });
}

// Relative magnitude in the outer frame of the box; a cheap wrap-around
// contamination detector.
template <typename Scalar>
Scalar boundary_frame_ratio(const Field2D<Scalar>& u, Scalar frame_fraction = Scalar(0.05)) {
  const auto& g = *u.grid;
  const int fx = std::max(1, int(frame_fraction * g.nx));
  const int fy = std::max(1, int(frame_fraction * g.ny));
  Scalar frame = 0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const bool outer = i < fx || i >= g.nx - fx || j < fy || j >= g.ny - fy;
      if (outer) frame = std::max(frame, std::abs(u.data(i, j)));
    }
  const Scalar global = u.data.abs().maxCoeff();
  return global > Scalar(0) ? frame / global : Scalar(0);
}

struct DecayFit {
  double slope = 0;      // fitted log-log slope of sup norm vs t
  double constant = 0;   // sup_t |t| * sup / (N^pow * ||P_N f||_1)
  std::vector<double> times, sup_norms;
  double boundary_ratio = 0;
};

// Measures ||U(t) P_N f||_inf for a concentrated datum against
// |t|^-1 N^(1 + a1/a2 - a1). The box must keep the dispersed wave away from
// the boundary at the final time; violation raises NumericalError.
template <typename Scalar>
DecayFit measure_localized_decay(GridPtr<Scalar> grid,
                                 const DispersionParams<Scalar>& params,
                                 Scalar n, const std::vector<Scalar>& t_list,
                                 Scalar boundary_tol = Scalar(0.05)) {
  if (t_list.size() < 4)
    throw std::invalid_argument("measure_localized_decay: need >= 4 times");
  const Scalar t_min = t_list.front(), t_max = t_list.back();
  if (!(t_min > Scalar(0)) || std::log10(t_max / t_min) < Scalar(1.5) - Scalar(1e-9))
    throw std::invalid_argument(
        "measure_localized_decay: t_list must span >= 1.5 decades");

  // Concentrated datum: grid-scale Gaussian, frequency-localized afterwards.
  const Scalar wx = Scalar(2) * grid->dx, wy = Scalar(2) * grid->dy;
  Field2D<Scalar> f0 = field_from_function(grid, [&](Scalar x, Scalar y) {
    return std::exp(-(x * x) / (2 * wx * wx) - (y * y) / (2 * wy * wy));
  });
  Field2D<Scalar> fN =
      lp_project(f0, params, n, ProjectionKind::Joint, DyadicRange::Loose);
  const Scalar l1 = lp_norm(fN, Scalar(1));
  if (!(l1 > Scalar(0)))
    throw NumericalError("measure_localized_decay: projected datum vanished");

  const Field2D<Scalar> fN_hat = to_spectral(fN);
  const auto phase = dispersion_phase(*grid, params);
  const Scalar npow =
      std::pow(n, Scalar(1) + params.alpha1 / params.alpha2 - params.alpha1);

  DecayFit fit;
  Scalar best_const = 0;
  const std::complex<Scalar> mi(0, -1);
  for (Scalar t : t_list) {
    Field2D<Scalar> s = fN_hat;
    s.data *= (mi * t * phase).exp();
    Field2D<Scalar> u = to_physical(s);
    const Scalar sup = u.data.abs().maxCoeff();
    fit.times.push_back(double(t));
    fit.sup_norms.push_back(double(sup));
    best_const = std::max(best_const, t * sup / (npow * l1));
    if (t == t_max) {
      fit.boundary_ratio = double(boundary_frame_ratio(u));
      if (fit.boundary_ratio > double(boundary_tol))
        throw NumericalError(
            "measure_localized_decay: wave reached the boundary (frame ratio " +
            std::to_string(fit.boundary_ratio) + "); enlarge the box");
    }
  }
  fit.constant = double(best_const);

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int m = int(t_list.size());
  for (int i = 0; i < m; ++i) {
    const double X = std::log(fit.times[i]), Y = std::log(fit.sup_norms[i]);
    sx += X;
    sy += Y;
    sxx += X * X;
    sxy += X * Y;
  }
  fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return fit;
}

// Discretized  || D1^{-b1(1/2-1/r)} D2^{-b2(1/2-1/r)} U(t) f ||_{L^q_t L^r}
// over [0, t_window] divided by ||f||_2. Inputs are pre-projected to be
// mean-zero along both frequency axes whenever the negative powers act.
template <typename Scalar>
Scalar strichartz_quotient(const Field2D<Scalar>& f,
                           const DispersionParams<Scalar>& params,
                           const AdmissiblePair<Scalar>& pair, Scalar t_window,
                           int nt) {
  if (nt < 2) throw std::invalid_argument("strichartz_quotient: nt >= 2");
  const Scalar wpow = -(Scalar(0.5) - Scalar(1) / pair.r);
  const Scalar a = params.beta1() * wpow, b = params.beta2() * wpow;

  Field2D<Scalar> fs = (f.space == Space::Spectral) ? f : to_spectral(f);
  if (a != Scalar(0) || b != Scalar(0)) fs = zero_axis_lines(fs);
  const Scalar f_l2 = l2_norm(fs);
  if (f_l2 == Scalar(0)) return Scalar(0);

  const auto& g = *fs.grid;
  const auto phase = dispersion_phase(g, params);
  Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic> weight(g.nx, g.ny);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const Scalar ax = std::abs(g.xi[i]), ay = std::abs(g.eta[j]);
      Scalar w = 1;
      if (a != Scalar(0)) w *= (ax == Scalar(0)) ? Scalar(0) : std::pow(ax, a);
      if (b != Scalar(0)) w *= (ay == Scalar(0)) ? Scalar(0) : std::pow(ay, b);
      weight(i, j) = w;
    }

  const std::complex<Scalar> mi(0, -1);
  const Scalar dt = t_window / Scalar(nt - 1);
  Scalar acc = 0, sup = 0;
  for (int k = 0; k < nt; ++k) {
    const Scalar t = Scalar(k) * dt;
    Field2D<Scalar> s = fs;
    s.data *= weight * (mi * t * phase).exp();
    const Scalar nr = lp_norm(to_physical(s), pair.r);
    sup = std::max(sup, nr);
    const Scalar trap = (k == 0 || k == nt - 1) ? Scalar(0.5) : Scalar(1);
    if (!std::isinf(pair.q)) acc += trap * std::pow(nr, pair.q) * dt;
  }
  const Scalar norm_qt =
      std::isinf(pair.q) ? sup : std::pow(acc, Scalar(1) / pair.q);
  return norm_qt / f_l2;
}

struct PairingSeries {
  std::vector<double> times;
  std::vector<std::complex<double>> pairing;  // <U_a(t) g, U_a'(t) g>
  double fitted_exponent = 0;                 // log-log slope of |pairing|
};

// L^2 pairing of the two free flows that share the x-symbol and differ in
// the y-order (alpha vs alpha_prime); the x-phases cancel, leaving
// sum_eta W(eta) exp(-it(|eta|^a - |eta|^a')). The fitted decay exponent is
// taken over the window after the pairing first drops below 70% of its
// initial value and before it hits the discreteness floor.
template <typename Scalar>
PairingSeries decoherence_pairing(const Field2D<Scalar>& g, Scalar alpha,
                                  Scalar alpha_prime,
                                  const std::vector<Scalar>& t_list) {
  auto bad = [](Scalar a) {
    return !(a > Scalar(0)) || a > Scalar(2) || a == Scalar(1);
  };
  if (bad(alpha) || bad(alpha_prime) || alpha == alpha_prime)
    throw std::invalid_argument(
        "decoherence_pairing: orders must be distinct elements of (0,2] \\ {1}");

  Field2D<Scalar> gs = (g.space == Space::Spectral) ? g : to_spectral(g);
  const auto& gr = *gs.grid;
  Eigen::Array<Scalar, Eigen::Dynamic, 1> w(gr.ny), dphi(gr.ny);
  for (int j = 0; j < gr.ny; ++j) {
    w[j] = gs.data.col(j).abs2().sum() * gr.cell_area();
    const Scalar ae = std::abs(gr.eta[j]);
    dphi[j] = std::pow(ae, alpha) - std::pow(ae, alpha_prime);
  }

  PairingSeries out;
  const std::complex<Scalar> mi(0, -1);
  for (Scalar t : t_list) {
    std::complex<Scalar> acc(0, 0);
    for (int j = 0; j < gr.ny; ++j) acc += w[j] * std::exp(mi * (t * dphi[j]));
    out.times.push_back(double(t));
    out.pairing.push_back(std::complex<double>(acc));
  }

  const double total = std::abs(out.pairing.front());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  bool started = false;
  for (size_t i = 0; i < out.times.size(); ++i) {
    const double mag = std::abs(out.pairing[i]);
    if (!started && mag < 0.7 * total) started = true;
    if (!started || out.times[i] <= 0 || mag < 1e-6 * total) continue;
    const double X = std::log(out.times[i]), Y = std::log(mag);
    sx += X;
    sy += Y;
    sxx += X * X;
    sxy += X * Y;
    ++m;
  }
  if (m >= 4)
    out.fitted_exponent = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return out;
}

}  // namespace mnls
