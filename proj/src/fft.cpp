#include "levylift/fft.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace levylift {

void fft_inplace(std::complex<double>* a, std::size_t n, int sign) {
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fft: length must be a power of two");
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    double ang = sign * 2.0 * M_PI / static_cast<double>(len);
    std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

void fft_nd(std::vector<std::complex<double>>& a, int dimension,
            std::size_t n, int sign) {
  std::size_t total = 1;
  for (int d = 0; d < dimension; ++d) total *= n;
  if (a.size() != total) throw std::invalid_argument("fft_nd: size mismatch");
  // axis ax has stride n^(dimension-1-ax) in row-major layout
  std::size_t stride = total / n;
  for (int ax = 0; ax < dimension; ++ax) {
    std::size_t lines = total / n;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t li = 0; li < static_cast<std::ptrdiff_t>(lines); ++li) {
      // decompose line index into (outer, inner) around the axis
      std::size_t l = static_cast<std::size_t>(li);
      std::size_t inner = l % stride;
      std::size_t outer = l / stride;
      std::size_t base = outer * stride * n + inner;
      std::vector<std::complex<double>> line(n);
      for (std::size_t k = 0; k < n; ++k) line[k] = a[base + k * stride];
      fft_inplace(line.data(), n, sign);
      for (std::size_t k = 0; k < n; ++k) a[base + k * stride] = line[k];
    }
    stride /= n;
  }
}

}  // namespace levylift
