#ifndef LEVYLIFT_FFT_HPP
#define LEVYLIFT_FFT_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace levylift {

// In-place radix-2 transform, sum_j a_j e^{sign 2 pi i jk / n}; n a power of
// two; no normalization. Deterministic (serial within one line).
void fft_inplace(std::complex<double>* a, std::size_t n, int sign);

// Transform along every axis of a row-major d-dimensional array with equal
// side n. Lines run through the parallel batch engine; each line transform
// is serial, so the result is thread-count independent.
void fft_nd(std::vector<std::complex<double>>& a, int dimension, std::size_t n,
            int sign);

}  // namespace levylift

#endif
