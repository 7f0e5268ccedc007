#pragma once

#include <complex>
#include <span>

// Thin wrappers over FFTW. Plans are cached per shape behind a mutex and
// executed through the new-array interface, so every function here is safe
// to call concurrently.
namespace gsqg::fft {

using cplx = std::complex<double>;

/// Unnormalized forward transform of a real n1 x n2 row-major array.
/// Writes the full (Hermitian) n1 x n2 spectrum in FFT index order.
void forward_real_2d(int n1, int n2, std::span<const double> in, std::span<cplx> out);

/// Unnormalized inverse of a Hermitian n1 x n2 spectrum; only the
/// non-redundant half is read.
void inverse_real_2d(int n1, int n2, std::span<const cplx> in, std::span<double> out);

/// Unnormalized complex 1-D transforms (sign -1 forward, +1 inverse).
void forward_1d(std::span<const cplx> in, std::span<cplx> out);
void inverse_1d(std::span<const cplx> in, std::span<cplx> out);

}  // namespace gsqg::fft
