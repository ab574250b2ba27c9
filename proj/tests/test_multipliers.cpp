// Fourier-multiplier calculus: parameter block, dyadic bumps, fractional
// derivatives vs the singular-integral oracle, potentials, Sobolev norms,
// dyadic projections, Bernstein/equivalence quotients.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mnls/dispersion.hpp>
#include <mnls/frac_oracle.hpp>
#include <mnls/multipliers.hpp>
#include <mnls/random_fields.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

using namespace mnls;
using Cd = std::complex<double>;
constexpr double kInf = std::numeric_limits<double>::infinity();

TEST_CASE("dispersion parameter block") {
  auto d = make_params(2.0, 1.5, 3.0, +1);
  CHECK(d.alpha() == doctest::Approx(1.5));
  CHECK(d.beta1() == doctest::Approx(0.0));
  CHECK(d.beta2() == doctest::Approx(0.25));
  CHECK(d.s_critical() == doctest::Approx(0.5 + 2.0 / 3.0 - 1.0));

  CHECK_THROWS_AS(make_params(1.0, 0.5, 3.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_params(2.0, 1.0, 3.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_params(1.5, 2.0, 3.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_params(2.0, 2.0, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_params(2.0, 2.0, 3.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_params(2.5, 2.0, 3.0, 1), std::invalid_argument);
}

TEST_CASE("bump support and partition of unity") {
  using B = LPBump<double>;
  CHECK(B::psi(0.5) == 1.0);
  CHECK(B::psi(-0.5) == 1.0);
  CHECK(B::psi(2.1) == 0.0);
  CHECK(B::phi(1.0) == doctest::Approx(1.0));
  CHECK(B::phi(0.49) == 0.0);
  CHECK(B::phi(2.01) == 0.0);
  for (double r : {0.3, 0.5, 1.0, 1.7}) {
    CHECK(B::phi(r) >= 0.0);
    CHECK(B::phi(r) <= 1.0);
  }
  // sum_{N in 2^Z} phi(r/N) = 1 on a log-spaced sample
  for (int m = 0; m <= 48; ++m) {
    const double r = 1e-6 * std::pow(10.0, 0.25 * m);
    double s = 0;
    for (int k = -60; k <= 60; ++k) s += B::phi(r / std::pow(2.0, k));
    CHECK(std::abs(s - 1.0) < 1e-10);
  }
}

TEST_CASE("frac_deriv on eigenfunctions") {
  auto g = make_grid<double>(32, 32, std::numbers::pi, std::numbers::pi);
  auto u = field_from_function(
      g, [](double x, double) { return std::exp(Cd(0, 3.0 * x)); });
  for (double s : {0.5, 1.3, 2.0}) {
    auto v = frac_deriv(u, Axis::X, s);
    const double factor = std::pow(3.0, s);
    const double rel =
        std::sqrt((v.data - factor * u.data).abs2().sum() / u.data.abs2().sum());
    CHECK(rel < 1e-12);
  }
  auto id = frac_deriv(u, Axis::X, 0.0);
  CHECK((id.data - u.data).abs().maxCoeff() == 0.0);
}

TEST_CASE("singular-integral oracle on cosine eigenfunctions") {
  // (-d_xx)^(a/2) cos(kx) = |k|^a cos(kx)
  for (double alpha : {0.5, 0.7, 1.5}) {
    const double k = 2.0;
    auto gfun = [k](double x) { return std::cos(k * x); };
    for (double x : {0.0, 0.4, 1.1}) {
      const double got = frac_laplacian_1d_point(gfun, alpha, x);
      const double want = std::pow(k, alpha) * std::cos(k * x);
      CHECK(got == doctest::Approx(want).epsilon(1e-4));
    }
  }
  auto zero = [](double) { return 0.0; };
  CHECK(frac_laplacian_1d_point(zero, 0.5, 0.3) == doctest::Approx(0.0));
}

TEST_CASE("oracle constant identity against the Fourier symbol") {
  // c_{1,a} int (1 - cos(k r)) / |r|^{1+a} dr = |k|^a, checked by quadrature
  const double alpha = 0.6, k = 1.7;
  const double c = frac_laplacian_constant_1d(alpha);
  auto f = [&](double r) {
    return (1.0 - std::cos(k * r)) / std::pow(r, 1.0 + alpha);
  };
  double total = adaptive_simpson(f, 1e-6, 1.0, 1e-12) +
                 k * k * std::pow(1e-6, 2.0 - alpha) / (2.0 * (2.0 - alpha));
  double a = 1.0;
  while (a < 512.0) {
    total += adaptive_simpson(f, a, 2.0 * a, 1e-12);
    a *= 2.0;
  }
  // tail: A^-a/a for the constant part, two integration-by-parts boundary
  // terms for the cosine part, remainder O(A^{-3-a}/k^3)
  total += std::pow(a, -alpha) / alpha +
           std::sin(k * a) / (k * std::pow(a, 1.0 + alpha)) +
           (1.0 + alpha) * std::cos(k * a) /
               (k * k * std::pow(a, 2.0 + alpha));
  CHECK(2.0 * c * total == doctest::Approx(std::pow(k, alpha)).epsilon(1e-5));
}

TEST_CASE("frac_deriv agrees with the singular-integral oracle") {
  // Gaussian profile, y-direction, s = 0.5; the dual definitions must agree.
  auto g = make_grid<double>(16, 256, 4.0, 16.0);
  auto u = field_from_function(
      g, [](double, double y) { return std::exp(-y * y); });
  auto v = frac_deriv(u, Axis::Y, 0.5);
  auto prof = [](double y) { return std::exp(-y * y); };
  double num = 0, den = 0;
  for (int j = 0; j < g->ny; ++j) {
    if (std::abs(g->y[j]) > 8.0) continue;  // skip the periodic wrap zone
    const double oracle = frac_laplacian_1d_point(prof, 0.5, g->y[j]);
    const double spectral = v.data(0, j).real();
    num += std::pow(spectral - oracle, 2);
    den += oracle * oracle;
  }
  CHECK(std::sqrt(num / den) < 1e-4);
}

TEST_CASE("aniso_potential basics") {
  auto g = make_grid<double>(32, 32, std::numbers::pi, std::numbers::pi);
  auto params = make_params(2.0, 2.0, 3.0, 1);  // alpha = 2
  auto u = field_from_function(g, [](double x, double y) {
    return std::exp(Cd(0, x + y));
  });
  auto v = aniso_potential(u, params, 2.0, false);
  // single mode (1,1), alpha = 2: weight 1 + 1 + 1 = 3
  const double rel =
      std::sqrt((v.data - 3.0 * u.data).abs2().sum() / u.data.abs2().sum());
  CHECK(rel < 1e-12);

  auto id = aniso_potential(u, params, 0.0, false);
  CHECK((id.data - u.data).abs().maxCoeff() == 0.0);

  auto params2 = make_params(2.0, 1.5, 3.0, 1);
  auto w = random_smooth_field(g, 11u);
  auto roundtrip = aniso_potential(aniso_potential(w, params2, -1.3, false),
                                   params2, 1.3, false);
  const double rel2 = std::sqrt((roundtrip.data - w.data).abs2().sum() /
                                w.data.abs2().sum());
  CHECK(rel2 < 1e-10);
}

TEST_CASE("sobolev norm conventions") {
  auto g = make_grid<double>(64, 64, 8.0, 8.0);
  auto params = make_params(2.0, 1.5, 3.0, 1);
  auto u = random_smooth_field(g, 5u);
  CHECK(sobolev_norm(u, params, 0.0) == doctest::Approx(lp_norm(u, 2.0)));

  // alpha = 2 reproduces the classical weight (1 + |xi|^2 + |eta|^2)^s
  auto pc = make_params(2.0, 2.0, 3.0, 1);
  auto us = to_spectral(u);
  double acc = 0;
  for (int j = 0; j < g->ny; ++j)
    for (int i = 0; i < g->nx; ++i)
      acc += std::pow(1.0 + g->xi[i] * g->xi[i] + g->eta[j] * g->eta[j], 1.3) *
             std::norm(us.data(i, j));
  CHECK(sobolev_norm(u, pc, 1.3) ==
        doctest::Approx(std::sqrt(acc * g->cell_area())).epsilon(1e-12));
}

TEST_CASE("homogeneous norm obeys the scaling law") {
  auto params = make_params(2.0, 1.5, 3.0, 1);
  const double sc = params.s_critical();
  auto g = make_grid<double>(256, 256, 16.0, 16.0);
  auto base = field_from_function(
      g, [](double x, double y) { return std::exp(-(x * x + y * y) / 2); });
  const double r12 = params.alpha1 / params.alpha2;
  for (double lam : {0.5, 2.0}) {
    auto scaled = field_from_function(g, [&](double x, double y) {
      return std::pow(lam, -params.alpha1 / (params.p - 1)) *
             std::exp(-(std::pow(x / lam, 2) + std::pow(y / std::pow(lam, r12), 2)) / 2);
    });
    for (double s : {0.0, sc, 1.0}) {
      const double got = sobolev_norm(scaled, params, s, true) /
                         sobolev_norm(base, params, s, true);
      const double want = std::pow(lam, sc - s);
      CHECK(std::abs(got / want - 1.0) < 0.02);
    }
  }
}

TEST_CASE("dyadic projection identities") {
  auto params = make_params(2.0, 1.5, 3.0, 1);
  const double alpha = params.alpha();
  auto g = make_grid<double>(256, 512, 32.0, 48.0);
  auto scales = resolvable_scales(*g, alpha);
  REQUIRE(scales.size() >= 3);

  // Band-limited field: spectrum supported where the resolvable sum is 1.
  const double rho_lo = 2.0 * scales.front(), rho_hi = 0.5 * scales.back();
  auto f = random_smooth_field(g, 21u, 1e6, 1e6);
  auto fs = to_spectral(f);
  for (int j = 0; j < g->ny; ++j)
    for (int i = 0; i < g->nx; ++i) {
      const double rho = std::sqrt(g->xi[i] * g->xi[i] +
                                   std::pow(std::abs(g->eta[j]), alpha));
      if (rho < rho_lo || rho > rho_hi) fs.data(i, j) = 0.0;
    }
  auto fband = to_physical(fs);

  Field2D<double> sum(g, Space::Physical);
  for (double n : scales) {
    auto pn = lp_project(fband, params, n);
    sum.data += pn.data;
  }
  const double rel = std::sqrt((sum.data - fband.data).abs2().sum() /
                               fband.data.abs2().sum());
  CHECK(rel < 1e-10);

  CHECK_THROWS_AS(lp_project(fband, params, scales.back() * 64.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(lp_project(fband, params, 3.0 * scales.front()),
                  std::invalid_argument);
}

TEST_CASE("projection of a unit-radius mode is the identity") {
  auto params = make_params(2.0, 2.0, 3.0, 1);
  auto g = make_grid<double>(64, 64, 8.0 * std::numbers::pi, 8.0 * std::numbers::pi);
  auto u = field_from_function(
      g, [](double x, double) { return std::exp(Cd(0, x)); });  // rho = 1
  auto p = lp_project(u, params, 1.0);
  const double rel =
      std::sqrt((p.data - u.data).abs2().sum() / u.data.abs2().sum());
  CHECK(rel < 1e-12);
}

TEST_CASE("derivative-projection equivalence with dyadic constants") {
  // || |grad_a|^s P_N f ||_2 / (N^s ||P_N f||_2) in [2^-|s|, 2^|s|]
  auto params = make_params(2.0, 1.5, 3.0, 1);
  auto g = make_grid<double>(256, 1024, 32.0 * std::numbers::pi, 40.0 * std::numbers::pi);
  auto scales = resolvable_scales(*g, params.alpha());
  REQUIRE(scales.size() >= 4);
  auto f = random_smooth_field(g, 31u, 1e6, 1e6);
  for (double s : {-1.0, 0.5, 1.0, 2.0}) {
    for (double n : scales) {
      auto pn = lp_project(f, params, n);
      const double denom = std::pow(n, s) * lp_norm(pn, 2.0);
      auto dpn = aniso_potential(pn, params, s, true);
      const double ratio = lp_norm(dpn, 2.0) / denom;
      CHECK(ratio >= std::pow(2.0, -std::abs(s)) * (1 - 1e-10));
      CHECK(ratio <= std::pow(2.0, std::abs(s)) * (1 + 1e-10));
    }
  }
}

TEST_CASE("bernstein quotients stay flat across scales") {
  struct PQ { double p, q; };
  const PQ pqs[] = {{2.0, kInf}, {2.0, 4.0}, {1.0, 2.0}};
  for (double a1a2 : {2.0, 1.5}) {  // alpha = 2 and 1.5
    auto params = make_params(2.0, a1a2, 3.0, 1);
    const double alpha = params.alpha();
    auto g = (alpha == 2.0)
                 ? make_grid<double>(512, 512, 32.0 * std::numbers::pi,
                                     32.0 * std::numbers::pi)
                 : make_grid<double>(256, 1024, 32.0 * std::numbers::pi,
                                     40.0 * std::numbers::pi);
    auto scales = resolvable_scales(*g, alpha);
    REQUIRE(scales.size() >= 4);
    auto f = random_smooth_field(g, 41u, 1e6, 1e6);
    for (auto [p, q] : pqs) {
      const double pow_n = (1.0 + 2.0 / alpha) * (1.0 / p - (std::isinf(q) ? 0.0 : 1.0 / q));
      double lo = kInf, hi = 0;
      for (double n : scales) {
        auto pn = lp_project(f, params, n);
        const double r =
            lp_norm(pn, q) / (std::pow(n, pow_n) * lp_norm(pn, p));
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
      CHECK(hi / lo < 4.0);  // one uniform constant across >= 4 dyadic scales
    }
  }
}

TEST_CASE("zero_axis_lines removes both frequency axes") {
  auto g = make_grid<double>(32, 32, 4.0, 4.0);
  auto u = random_smooth_field(g, 3u);
  auto v = to_spectral(zero_axis_lines(u));
  CHECK(v.data.row(0).abs().maxCoeff() == 0.0);
  CHECK(v.data.col(0).abs().maxCoeff() == 0.0);
}
