// fft.hpp
// Unitary 2D complex DFT on column-major Eigen arrays, built on the 1D
// transforms from unsupported/Eigen/FFT. Index (i,j) holds the sample at
// (x_i, y_j); axis 0 transforms run down contiguous columns, axis 1 runs
// across rows through a scratch vector.
//
// Normalization is symmetric (1/sqrt(nx*ny) both ways) so the discrete
// Plancherel identity holds without constants.
#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Core>
#include <unsupported/Eigen/FFT>

namespace mnls {

template <typename Scalar>
using ComplexArray2D =
    Eigen::Array<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

template <typename Scalar>
void dft_axis0(ComplexArray2D<Scalar>& a, bool inverse) {
  Eigen::FFT<Scalar> fft;
  const Eigen::Index nx = a.rows(), ny = a.cols();
  Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1> in(nx), out(nx);
  for (Eigen::Index j = 0; j < ny; ++j) {
    in = a.col(j).matrix();
    if (inverse)
      fft.inv(out, in);
    else
      fft.fwd(out, in);
    a.col(j) = out.array();
  }
}

template <typename Scalar>
void dft_axis1(ComplexArray2D<Scalar>& a, bool inverse) {
  Eigen::FFT<Scalar> fft;
  const Eigen::Index nx = a.rows(), ny = a.cols();
  Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1> in(ny), out(ny);
  for (Eigen::Index i = 0; i < nx; ++i) {
    in = a.row(i).matrix().transpose();
    if (inverse)
      fft.inv(out, in);
    else
      fft.fwd(out, in);
    a.row(i) = out.array().transpose();
  }
}

}  // namespace detail

// In-place forward DFT, scaled by 1/sqrt(nx*ny).
template <typename Scalar>
void dft2_forward(ComplexArray2D<Scalar>& a) {
  if (a.size() == 0) throw std::invalid_argument("dft2_forward: empty array");
  detail::dft_axis0(a, false);
  detail::dft_axis1(a, false);
  a *= Scalar(1) / std::sqrt(Scalar(a.rows()) * Scalar(a.cols()));
}

// In-place inverse DFT, scaled by 1/sqrt(nx*ny); exact inverse of
// dft2_forward up to roundoff.
template <typename Scalar>
void dft2_inverse(ComplexArray2D<Scalar>& a) {
  if (a.size() == 0) throw std::invalid_argument("dft2_inverse: empty array");
  // Eigen's inv() divides by the transform length on each axis, so the pair
  // of passes scales by 1/(nx*ny); rescale to the symmetric convention.
  detail::dft_axis0(a, true);
  detail::dft_axis1(a, true);
  a *= std::sqrt(Scalar(a.rows()) * Scalar(a.cols()));
}

}  // namespace mnls
