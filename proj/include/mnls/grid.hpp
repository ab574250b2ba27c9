// grid.hpp
// Truncated periodic computational box, its discrete frequency lattice, and
// the complex field container every other module operates on.
//
// Physical lattice: x_i = -lx + i*dx on [-lx, lx), likewise in y. Frequency
// lattice in DFT order: xi_j = pi*j/lx for j in {0,...,nx/2-1, -nx/2,...,-1},
// so xi[0] = 0 and the single unpaired Nyquist mode sits at index nx/2.
#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mnls/fft.hpp"

namespace mnls {

enum class Space { Physical, Spectral };

template <typename Scalar = double>
struct Grid2D {
  using RealVector = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

  int nx = 0, ny = 0;        // point counts, even, >= 8
  Scalar lx = 0, ly = 0;     // box half-widths
  Scalar dx = 0, dy = 0;     // spacings 2*l/n
  RealVector x, y;           // physical lattices
  RealVector xi, eta;        // frequency lattices, DFT order

  Scalar cell_area() const { return dx * dy; }
  Scalar xi_nyquist() const { return std::numbers::pi_v<Scalar> / dx; }
  Scalar eta_nyquist() const { return std::numbers::pi_v<Scalar> / dy; }
};

template <typename Scalar = double>
using GridPtr = std::shared_ptr<const Grid2D<Scalar>>;

// Builds the periodic grid; rejects odd, non-positive, or sub-minimal sizes.
template <typename Scalar = double>
GridPtr<Scalar> make_grid(int nx, int ny, Scalar lx, Scalar ly) {
  if (nx <= 0 || ny <= 0)
    throw std::invalid_argument("make_grid: point counts must be positive");
  if (nx % 2 != 0 || ny % 2 != 0)
    throw std::invalid_argument("make_grid: point counts must be even, got (" +
                                std::to_string(nx) + ", " + std::to_string(ny) + ")");
  if (nx < 8 || ny < 8)
    throw std::invalid_argument("make_grid: point counts must be >= 8");
  if (!(lx > Scalar(0)) || !(ly > Scalar(0)))
    throw std::invalid_argument("make_grid: half-widths must be positive");

  auto g = std::make_shared<Grid2D<Scalar>>();
  g->nx = nx;
  g->ny = ny;
  g->lx = lx;
  g->ly = ly;
  g->dx = Scalar(2) * lx / Scalar(nx);
  g->dy = Scalar(2) * ly / Scalar(ny);
  g->x.resize(nx);
  g->y.resize(ny);
  g->xi.resize(nx);
  g->eta.resize(ny);
  const Scalar pi = std::numbers::pi_v<Scalar>;
  for (int i = 0; i < nx; ++i) {
    g->x[i] = -lx + Scalar(i) * g->dx;
    const int j = (i < nx / 2) ? i : i - nx;
    g->xi[i] = pi * Scalar(j) / lx;
  }
  for (int i = 0; i < ny; ++i) {
    g->y[i] = -ly + Scalar(i) * g->dy;
    const int j = (i < ny / 2) ? i : i - ny;
    g->eta[i] = pi * Scalar(j) / ly;
  }
  return g;
}

template <typename Scalar = double>
struct Field2D {
  using Complex = std::complex<Scalar>;

  GridPtr<Scalar> grid;
  ComplexArray2D<Scalar> data;  // (nx, ny), data(i,j) ~ u(x_i, y_j)
  Space space = Space::Physical;

  Field2D() = default;
  Field2D(GridPtr<Scalar> g, Space s)
      : grid(std::move(g)),
        data(ComplexArray2D<Scalar>::Zero(grid->nx, grid->ny)),
        space(s) {}
};

template <typename Scalar>
Field2D<Scalar> zero_field(GridPtr<Scalar> g, Space s = Space::Physical) {
  return Field2D<Scalar>(std::move(g), s);
}

template <typename Scalar, typename Fn>
Field2D<Scalar> field_from_function(GridPtr<Scalar> g, Fn&& f) {
  Field2D<Scalar> u(g, Space::Physical);
  for (int j = 0; j < g->ny; ++j)
    for (int i = 0; i < g->nx; ++i)
      u.data(i, j) = f(g->x[i], g->y[j]);
  return u;
}

template <typename Scalar>
Field2D<Scalar> to_spectral(const Field2D<Scalar>& f) {
  if (f.space != Space::Physical)
    throw std::invalid_argument("to_spectral: input must be physical");
  Field2D<Scalar> out = f;
  dft2_forward(out.data);
  out.space = Space::Spectral;
  return out;
}

template <typename Scalar>
Field2D<Scalar> to_physical(const Field2D<Scalar>& f) {
  if (f.space != Space::Spectral)
    throw std::invalid_argument("to_physical: input must be spectral");
  Field2D<Scalar> out = f;
  dft2_inverse(out.data);
  out.space = Space::Physical;
  return out;
}

// Discrete L^q norm by Riemann-sum quadrature, (sum |f|^q dx dy)^(1/q);
// max norm for q = inf.
template <typename Scalar>
Scalar lp_norm(const Field2D<Scalar>& f, Scalar q) {
  if (f.space != Space::Physical)
    throw std::invalid_argument("lp_norm: input must be physical");
  if (std::isinf(q)) return f.data.abs().maxCoeff();
  if (q < Scalar(1)) throw std::invalid_argument("lp_norm: q must be >= 1");
  const Scalar w = f.grid->cell_area();
  if (q == Scalar(2)) return std::sqrt(f.data.abs2().sum() * w);
  return std::pow((f.data.abs().pow(q)).sum() * w, Scalar(1) / q);
}

// L^2 norm valid in either representation (Plancherel makes them agree).
template <typename Scalar>
Scalar l2_norm(const Field2D<Scalar>& f) {
  return std::sqrt(f.data.abs2().sum() * f.grid->cell_area());
}

// <u,v> = sum u * conj(v) dx dy, same quadrature weights both spaces.
template <typename Scalar>
std::complex<Scalar> inner_product(const Field2D<Scalar>& u,
                                   const Field2D<Scalar>& v) {
  if (u.space != v.space)
    throw std::invalid_argument("inner_product: representation mismatch");
  return (u.data * v.data.conjugate()).sum() * u.grid->cell_area();
}

}  // namespace mnls
