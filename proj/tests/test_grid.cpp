// Grid, transform, and norm contracts.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mnls/grid.hpp>
#include <mnls/random_fields.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

using namespace mnls;
using Cd = std::complex<double>;
constexpr double kInf = std::numeric_limits<double>::infinity();

TEST_CASE("make_grid lattices") {
  auto g = make_grid<double>(8, 8, std::numbers::pi, std::numbers::pi);
  // lx = pi makes xi_j the integers {0,...,3,-4,...,-1} in DFT order.
  CHECK(g->xi[0] == doctest::Approx(0.0));
  CHECK(g->xi[3] == doctest::Approx(3.0));
  CHECK(g->xi[4] == doctest::Approx(-4.0));
  CHECK(g->xi[7] == doctest::Approx(-1.0));
  CHECK(g->eta[0] == doctest::Approx(0.0));

  auto g2 = make_grid<double>(16, 8, 2 * std::numbers::pi, std::numbers::pi);
  CHECK(g2->dx == doctest::Approx(std::numbers::pi / 4));

  CHECK_THROWS_AS(make_grid<double>(7, 8, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid<double>(8, 8, -1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid<double>(0, 8, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("frequency lattice symmetric except Nyquist") {
  auto g = make_grid<double>(16, 12, 3.0, 2.0);
  for (int i = 1; i < g->nx / 2; ++i)
    CHECK(g->xi[i] == doctest::Approx(-g->xi[g->nx - i]));
  CHECK(g->xi[g->nx / 2] < 0);  // the unpaired Nyquist mode
  CHECK(int(g->x.size()) * int(g->y.size()) == g->nx * g->ny);
}

TEST_CASE("plane wave maps to a single spectral coefficient") {
  auto g = make_grid<double>(32, 32, std::numbers::pi, std::numbers::pi);
  auto u = field_from_function(g, [](double x, double) {
    return std::exp(Cd(0, 1) * Cd(x, 0));
  });
  auto s = to_spectral(u);
  int nonzero = 0;
  for (int j = 0; j < g->ny; ++j)
    for (int i = 0; i < g->nx; ++i)
      if (std::abs(s.data(i, j)) > 1e-10) {
        ++nonzero;
        CHECK(g->xi[i] == doctest::Approx(1.0));
        CHECK(g->eta[j] == doctest::Approx(0.0));
      }
  CHECK(nonzero == 1);
}

TEST_CASE("constant field concentrates at the zero mode") {
  auto g = make_grid<double>(16, 16, 2.0, 3.0);
  auto u = field_from_function(g, [](double, double) { return 1.0; });
  auto s = to_spectral(u);
  const double total = s.data.abs2().sum();
  CHECK(std::norm(s.data(0, 0)) == doctest::Approx(total).epsilon(1e-12));
}

TEST_CASE("roundtrip and Plancherel to 1e-12") {
  auto g = make_grid<double>(32, 48, 2.5, 4.0);
  auto u = random_smooth_field(g, 7u, 3.0, 3.0);
  auto back = to_physical(to_spectral(u));
  const double rel = std::sqrt((back.data - u.data).abs2().sum() /
                               u.data.abs2().sum());
  CHECK(rel < 1e-12);

  auto s = to_spectral(u);
  CHECK(l2_norm(s) == doctest::Approx(lp_norm(u, 2.0)).epsilon(1e-12));
}

TEST_CASE("transform linearity") {
  auto g = make_grid<double>(16, 16, 1.0, 1.0);
  auto u = random_smooth_field(g, 1u);
  auto v = random_smooth_field(g, 2u);
  const Cd a(1.3, -0.4), b(-0.7, 2.1);
  Field2D<double> w(g, Space::Physical);
  w.data = a * u.data + b * v.data;
  auto ws = to_spectral(w);
  auto us = to_spectral(u);
  auto vs = to_spectral(v);
  const double rel = std::sqrt(
      (ws.data - a * us.data - b * vs.data).abs2().sum() / ws.data.abs2().sum());
  CHECK(rel < 1e-12);
}

TEST_CASE("representation mismatch rejected") {
  auto g = make_grid<double>(8, 8, 1.0, 1.0);
  auto u = zero_field(g);
  CHECK_THROWS_AS(to_physical(u), std::invalid_argument);
  CHECK_THROWS_AS(to_spectral(to_spectral(random_smooth_field(g, 3u))),
                  std::invalid_argument);
}

TEST_CASE("lp_norm quadrature and homogeneity") {
  auto g = make_grid<double>(128, 128, 12.0, 12.0);
  auto u = field_from_function(
      g, [](double x, double y) { return std::exp(-(x * x + y * y) / 2); });
  // integral of exp(-r^2) over the plane is pi
  CHECK(lp_norm(u, 2.0) ==
        doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-6));
  CHECK(lp_norm(u, kInf) == doctest::Approx(1.0));

  Field2D<double> u2 = u;
  u2.data *= 2.0;
  CHECK(lp_norm(u2, 3.0) == doctest::Approx(2.0 * lp_norm(u, 3.0)));

  CHECK_THROWS_AS(lp_norm(u, 0.5), std::invalid_argument);
}
