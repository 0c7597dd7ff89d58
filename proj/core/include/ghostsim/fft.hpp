#ifndef GHOSTSIM_FFT_HPP
#define GHOSTSIM_FFT_HPP

#include <complex>
#include <span>

namespace ghostsim::fft {

// Unitary DFT building blocks backed by FFTW. All transforms are in-place
// and normalized by 1/sqrt(N) per direction, so forward followed by inverse
// is the identity and Parseval holds without extra factors.
//
// Plans are cached internally (keyed by geometry) and execution is
// thread-safe for distinct data arrays.

/// Batched transform over the two transverse axes of an (nx, ny, nt) block
/// laid out as data[(it*ny + iy)*nx + ix]. ny == 1 degenerates to 1D.
/// sign: -1 forward (e^{-iqx}), +1 inverse.
void spatial(std::span<std::complex<double>> data, int nx, int ny, int nt, int sign);

/// Batched transform over the temporal axis (stride nx*ny).
void temporal(std::span<std::complex<double>> data, int nx, int ny, int nt, int sign);

}  // namespace ghostsim::fft

#endif
