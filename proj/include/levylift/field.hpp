#ifndef LEVYLIFT_FIELD_HPP
#define LEVYLIFT_FIELD_HPP

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <string>

namespace levylift {

enum class Symmetry { none, antisymmetric, symmetric, isotropic3 };

// |f(x)| <= constant * (1+|x|)^{-rate}; rate <= 0 declares bounded growth.
struct DecayBound {
  double constant = 1.0;
  double rate = 0.0;
};

// An evaluable scalar function handle on R^d. Closures must be pure and
// allocation-free; batch evaluation may run on any thread.
struct Field {
  int dimension = 1;
  std::function<double(std::span<const double>)> evaluate;
  Symmetry symmetry = Symmetry::none;
  double smoothness = std::numeric_limits<double>::infinity();
  DecayBound decay{1.0, 0.0};
  // x' in R^{d-1} -> d_1 f(0, x'); required on the symmetry hyperplane.
  std::function<double(std::span<const double>)> normal_derivative;

  double operator()(std::span<const double> x) const { return evaluate(x); }
  double operator()(std::initializer_list<double> x) const {
    return evaluate(std::span<const double>(x.begin(), x.size()));
  }
};

inline double norm2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

// Central second-difference Laplacian, step h per axis.
double fd_laplacian(const Field& f, std::span<const double> x, double h);
// Central first difference along one axis.
double fd_partial(const Field& f, std::span<const double> x, int axis, double h);

}  // namespace levylift

#endif
