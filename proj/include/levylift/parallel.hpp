#ifndef LEVYLIFT_PARALLEL_HPP
#define LEVYLIFT_PARALLEL_HPP

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

// Batch evaluation helpers. Every parallel loop writes to a slot indexed by
// the work item and reductions run serially in slot order, so results are
// bit-identical for any thread count. The *_serial variants are the reference
// implementations used by tests and the benchmark target.

namespace levylift::par {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

template <class F>
void map_indexed(std::size_t n, double* out, F&& fn) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    out[i] = fn(static_cast<std::size_t>(i));
}

template <class F>
void map_indexed_serial(std::size_t n, double* out, F&& fn) {
  for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
}

// Kahan summation in fixed slot order.
inline double sum_ordered(const double* v, std::size_t n) {
  double s = 0.0, c = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double y = v[i] - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

inline double sum_ordered(const std::vector<double>& v) {
  return sum_ordered(v.data(), v.size());
}

template <class F>
double map_sum(std::size_t n, F&& fn) {
  std::vector<double> slots(n);
  map_indexed(n, slots.data(), fn);
  return sum_ordered(slots);
}

template <class F>
double map_sum_serial(std::size_t n, F&& fn) {
  std::vector<double> slots(n);
  map_indexed_serial(n, slots.data(), fn);
  return sum_ordered(slots);
}

}  // namespace levylift::par

#endif
