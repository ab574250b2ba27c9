// solver.hpp
// Strang split-step pseudo-spectral integrator for
//   i u_t = (D1^a1 + D2^a2) u + mu |u|^(p-1) u.
// The nonlinear half-steps are the exact flow of the pointwise ODE (the
// phase rotation leaves |u| untouched), the linear step is the exact free
// propagator on the grid, so discrete mass is conserved to roundoff apart
// from what dealiasing removes, which is tracked separately.
#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "mnls/dispersion.hpp"
#include "mnls/errors.hpp"
#include "mnls/grid.hpp"
#include "mnls/linear_flow.hpp"
#include "mnls/multipliers.hpp"

namespace mnls {

enum class Dealias { TwoThirds, None };

struct SolverConfig {
  double dt = 1e-3;
  double t_end = 1.0;
  Dealias dealias = Dealias::TwoThirds;
  int monitor_every = 10;
  double blowup_threshold = 1e6;  // trigger at this multiple of the initial sup
  bool nonlinear = true;          // test hook: false degenerates to U(t)

  void validate() const {
    if (!(dt > 0)) throw std::invalid_argument("SolverConfig: dt must be > 0");
    if (t_end < 0) throw std::invalid_argument("SolverConfig: t_end must be >= 0");
    if (monitor_every < 1)
      throw std::invalid_argument("SolverConfig: monitor_every must be >= 1");
  }
};

enum class TerminationReason { Completed, BlowupTriggered, NanDetected };

inline std::string to_string(TerminationReason r) {
  switch (r) {
    case TerminationReason::Completed: return "completed";
    case TerminationReason::BlowupTriggered: return "blowup_triggered";
    default: return "nan_detected";
  }
}

// Diagnostic time series of one run; all series share their length.
struct RunRecord {
  DispersionParams<double> params;
  SolverConfig config;
  std::vector<double> times;
  std::vector<double> mass;           // ||u||_2^2
  std::vector<double> energy;
  std::vector<double> hs_alpha_half;  // || |grad_alpha|^(a1/2) u ||_2
  std::vector<double> sup_norm;
  std::vector<double> dealias_loss;   // cumulative removed mass, relative
  TerminationReason terminated_reason = TerminationReason::Completed;
};

// Energy functional; the derivative terms are evaluated spectrally.
template <typename Scalar>
Scalar energy(const Field2D<Scalar>& u, const DispersionParams<Scalar>& params) {
  const Field2D<Scalar>& phys = u;
  if (u.space != Space::Physical)
    throw std::invalid_argument("energy: input must be physical");
  Field2D<Scalar> sp = to_spectral(u);
  const auto& g = *u.grid;
  Scalar deriv = 0;
  for (int j = 0; j < g.ny; ++j) {
    const Scalar wy = std::pow(std::abs(g.eta[j]), params.alpha2);
    for (int i = 0; i < g.nx; ++i) {
      const Scalar wx = std::pow(std::abs(g.xi[i]), params.alpha1);
      deriv += (wx + wy) * std::norm(sp.data(i, j));
    }
  }
  deriv *= Scalar(0.5) * g.cell_area();
  const Scalar pot = Scalar(params.mu) / (params.p + 1) *
                     (phys.data.abs().pow(params.p + 1)).sum() * g.cell_area();
  return deriv + pot;
}

// || |grad_alpha|^(a1/2) u ||_2, the derivative norm controlled by the
// energy identity.
template <typename Scalar>
Scalar derivative_norm(const Field2D<Scalar>& u,
                       const DispersionParams<Scalar>& params) {
  return sobolev_norm(u, params, params.alpha1 / Scalar(2), true);
}

enum class GlobalClass {
  SubcriticalGlobal,
  MassCriticalSmallData,
  SupercriticalSmallEnergy
};

inline std::string to_string(GlobalClass c) {
  switch (c) {
    case GlobalClass::SubcriticalGlobal: return "subcritical_global";
    case GlobalClass::MassCriticalSmallData: return "mass_critical_small_data";
    default: return "supercritical_small_energy";
  }
}

// Trichotomy from the sign of (p-1)(1/a1 + 1/a2) - 2.
template <typename Scalar>
GlobalClass classify_global(const DispersionParams<Scalar>& params) {
  const Scalar v = (params.p - 1) * (1 / params.alpha1 + 1 / params.alpha2);
  if (std::abs(v - Scalar(2)) <= Scalar(1e-12))
    return GlobalClass::MassCriticalSmallData;
  return v < Scalar(2) ? GlobalClass::SubcriticalGlobal
                       : GlobalClass::SupercriticalSmallEnergy;
}

// One Strang step with precomputed spectral tables.
template <typename Scalar = double>
class StrangStepper {
 public:
  StrangStepper(GridPtr<Scalar> grid, const DispersionParams<Scalar>& params,
                Scalar dt, Dealias dealias, bool nonlinear = true)
      : grid_(grid), params_(params), dt_(dt), nonlinear_(nonlinear) {
    const auto ph = dispersion_phase(*grid, params);
    const std::complex<Scalar> mi(0, -1);
    linear_factor_ = (mi * dt * ph).exp();
    if (dealias == Dealias::TwoThirds) {
      // Keep |mode| <= n/3 on each axis; the Nyquist mode goes with the rest.
      for (int i = 0; i < grid->nx; ++i) {
        const int j = (i < grid->nx / 2) ? i : i - grid->nx;
        if (std::abs(j) > grid->nx / 3) linear_factor_.row(i).setZero();
      }
      for (int k = 0; k < grid->ny; ++k) {
        const int j = (k < grid->ny / 2) ? k : k - grid->ny;
        if (std::abs(j) > grid->ny / 3) linear_factor_.col(k).setZero();
      }
    }
  }

  // Advances u (physical) by dt in place; returns the mass removed by
  // dealiasing in this step (absolute, same units as ||u||_2^2).
  Scalar step(Field2D<Scalar>& u) const {
    if (nonlinear_) nonlinear_half(u);
    dft2_forward(u.data);
    Scalar before = 0;
    if (track_loss_) before = u.data.abs2().sum();
    u.data *= linear_factor_;
    Scalar removed = 0;
    if (track_loss_) removed = std::max(Scalar(0), before - u.data.abs2().sum());
    dft2_inverse(u.data);
    if (nonlinear_) nonlinear_half(u);
    return removed * grid_->cell_area();
  }

 private:
  void nonlinear_half(Field2D<Scalar>& u) const {
    const Scalar c = -Scalar(params_.mu) * dt_ / Scalar(2);
    const Scalar pm1 = params_.p - 1;
    auto& d = u.data;
    if (pm1 == Scalar(2)) {
      for (Eigen::Index k = 0; k < d.size(); ++k) {
        const Scalar a2 = std::norm(d(k));
        d(k) *= std::polar(Scalar(1), c * a2);
      }
    } else {
      const Scalar half_pm1 = pm1 / Scalar(2);
      for (Eigen::Index k = 0; k < d.size(); ++k) {
        const Scalar a2 = std::norm(d(k));
        d(k) *= std::polar(Scalar(1), c * std::pow(a2, half_pm1));
      }
    }
  }

  GridPtr<Scalar> grid_;
  DispersionParams<Scalar> params_;
  Scalar dt_;
  bool nonlinear_;
  bool track_loss_ = true;
  ComplexArray2D<Scalar> linear_factor_;
};

// Convenience single step (physical in, physical out).
template <typename Scalar>
Field2D<Scalar> step_strang(const Field2D<Scalar>& u,
                            const DispersionParams<Scalar>& params, Scalar dt,
                            Dealias dealias = Dealias::TwoThirds,
                            bool nonlinear = true) {
  if (u.space != Space::Physical)
    throw std::invalid_argument("step_strang: input must be physical");
  if (!u.data.allFinite()) throw NumericalError("step_strang: non-finite input");
  Field2D<Scalar> out = u;
  StrangStepper<Scalar>(u.grid, params, dt, dealias, nonlinear).step(out);
  return out;
}

// Marches to t_end (or an early stop) recording diagnostics every
// monitor_every steps. The time horizon is rounded to a whole number of
// steps.
template <typename Scalar>
std::pair<Field2D<Scalar>, RunRecord> evolve(const Field2D<Scalar>& u0,
                                             const DispersionParams<Scalar>& params,
                                             const SolverConfig& config) {
  params.validate();
  config.validate();
  if (u0.space != Space::Physical)
    throw std::invalid_argument("evolve: datum must be physical");

  RunRecord rec;
  rec.params = DispersionParams<double>{double(params.alpha1), double(params.alpha2),
                                        double(params.p), params.mu};
  rec.config = config;

  Field2D<Scalar> u = u0;
  const long steps = std::lround(config.t_end / config.dt);
  StrangStepper<Scalar> stepper(u.grid, params, Scalar(config.dt), config.dealias,
                                config.nonlinear);

  const Scalar mass0 = l2_norm(u0);
  const Scalar sup0 = u0.data.abs().maxCoeff();
  Scalar removed_total = 0;

  auto monitor = [&](Scalar t) {
    Field2D<Scalar> sp = to_spectral(u);
    const auto& g = *u.grid;
    Scalar m = sp.data.abs2().sum() * g.cell_area();
    Scalar deriv = 0, hs = 0;
    const Scalar a = params.alpha();
    for (int j = 0; j < g.ny; ++j) {
      const Scalar ae = std::abs(g.eta[j]);
      const Scalar wy = std::pow(ae, params.alpha2);
      const Scalar ea = std::pow(ae, a);
      for (int i = 0; i < g.nx; ++i) {
        const Scalar amp = std::norm(sp.data(i, j));
        deriv += (std::pow(std::abs(g.xi[i]), params.alpha1) + wy) * amp;
        const Scalar base = g.xi[i] * g.xi[i] + ea;
        if (base > 0) hs += std::pow(base, params.alpha1 / 2) * amp;
      }
    }
    const Scalar pot = Scalar(params.mu) / (params.p + 1) *
                       (u.data.abs().pow(params.p + 1)).sum() * g.cell_area();
    rec.times.push_back(double(t));
    rec.mass.push_back(double(m));
    rec.energy.push_back(double(Scalar(0.5) * deriv * g.cell_area() + pot));
    rec.hs_alpha_half.push_back(double(std::sqrt(hs * g.cell_area())));
    rec.sup_norm.push_back(double(u.data.abs().maxCoeff()));
    rec.dealias_loss.push_back(
        mass0 > 0 ? double(removed_total / (mass0 * mass0)) : 0.0);
  };

  monitor(Scalar(0));
  for (long k = 1; k <= steps; ++k) {
    removed_total += stepper.step(u);
    const bool at_monitor = (k % config.monitor_every == 0) || k == steps;
    if (!at_monitor) continue;
    if (!u.data.allFinite()) {
      rec.terminated_reason = TerminationReason::NanDetected;
      monitor(Scalar(k) * Scalar(config.dt));
      return {u, rec};
    }
    const Scalar sup = u.data.abs().maxCoeff();
    if (sup0 > 0 && sup > Scalar(config.blowup_threshold) * sup0) {
      rec.terminated_reason = TerminationReason::BlowupTriggered;
      monitor(Scalar(k) * Scalar(config.dt));
      return {u, rec};
    }
    monitor(Scalar(k) * Scalar(config.dt));
  }
  rec.terminated_reason = TerminationReason::Completed;
  return {u, rec};
}

}  // namespace mnls
