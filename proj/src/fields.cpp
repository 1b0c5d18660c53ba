#include "levylift/fields.hpp"

#include <cmath>

#include "levylift/errors.hpp"

namespace levylift {

double fd_laplacian(const Field& f, std::span<const double> x, double h) {
  std::array<double, 8> p{};
  std::copy(x.begin(), x.end(), p.begin());
  std::span<const double> pv(p.data(), x.size());
  double center = f(pv);
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double xi = p[i];
    p[i] = xi + h;
    double up = f(pv);
    p[i] = xi - h;
    double dn = f(pv);
    p[i] = xi;
    acc += (up + dn - 2.0 * center) / (h * h);
  }
  return acc;
}

double fd_partial(const Field& f, std::span<const double> x, int axis, double h) {
  std::array<double, 8> p{};
  std::copy(x.begin(), x.end(), p.begin());
  std::span<const double> pv(p.data(), x.size());
  double xi = p[axis];
  p[axis] = xi + h;
  double up = f(pv);
  p[axis] = xi - h;
  double dn = f(pv);
  return (up - dn) / (2.0 * h);
}

namespace fields {

Field x1_gaussian(int n) {
  Field f;
  f.dimension = n;
  f.evaluate = [](std::span<const double> x) {
    return x[0] * std::exp(-M_PI * norm2(x));
  };
  f.symmetry = Symmetry::antisymmetric;
  f.decay = {1.0, 6.0};
  f.normal_derivative = [](std::span<const double> xp) {
    return std::exp(-M_PI * norm2(xp));
  };
  return f;
}

Field x1_linear(int n) {
  Field f;
  f.dimension = n;
  f.evaluate = [](std::span<const double> x) { return x[0]; };
  f.symmetry = Symmetry::antisymmetric;
  f.decay = {1.0, -1.0};  // grows linearly
  f.normal_derivative = [](std::span<const double>) { return 1.0; };
  return f;
}

Field x1_cauchy(int n) {
  Field f;
  f.dimension = n;
  f.evaluate = [](std::span<const double> x) {
    return x[0] / (1.0 + norm2(x));
  };
  f.symmetry = Symmetry::antisymmetric;
  f.decay = {1.0, 1.0};
  f.normal_derivative = [](std::span<const double> xp) {
    return 1.0 / (1.0 + norm2(xp));
  };
  return f;
}

Field x1_poly_gaussian(int n) {
  Field f;
  f.dimension = n;
  f.evaluate = [](std::span<const double> x) {
    return x[0] * (1.0 + x[0] * x[0]) * std::exp(-M_PI * norm2(x));
  };
  f.symmetry = Symmetry::antisymmetric;
  f.decay = {2.0, 6.0};
  f.normal_derivative = [](std::span<const double> xp) {
    return std::exp(-M_PI * norm2(xp));
  };
  return f;
}

namespace {
// smooth cutoff exp(-1/(1-t)) for t in [0,1)
inline double bump_profile(double t) {
  if (t >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - t));
}
}  // namespace

Field x1_bump(int n, double radius) {
  Field f;
  f.dimension = n;
  double r2 = radius * radius;
  f.evaluate = [r2](std::span<const double> x) {
    return x[0] * bump_profile(norm2(x) / r2);
  };
  f.symmetry = Symmetry::antisymmetric;
  f.decay = {1.0, 50.0};
  f.normal_derivative = [r2](std::span<const double> xp) {
    return bump_profile(norm2(xp) / r2);
  };
  return f;
}

Field even_gaussian_1d() {
  Field f;
  f.dimension = 1;
  f.evaluate = [](std::span<const double> x) { return std::exp(-M_PI * x[0] * x[0]); };
  f.symmetry = Symmetry::symmetric;
  f.decay = {1.0, 8.0};
  return f;
}

Field even_cauchy2_1d() {
  Field f;
  f.dimension = 1;
  f.evaluate = [](std::span<const double> x) {
    double t = 1.0 + x[0] * x[0];
    return 1.0 / (t * t);
  };
  f.symmetry = Symmetry::symmetric;
  f.decay = {1.0, 4.0};
  return f;
}

Field even_gausscos_1d() {
  Field f;
  f.dimension = 1;
  f.evaluate = [](std::span<const double> x) {
    return std::exp(-x[0] * x[0]) * std::cos(x[0]);
  };
  f.symmetry = Symmetry::symmetric;
  f.decay = {1.0, 8.0};
  return f;
}

Field one(int d) {
  Field f;
  f.dimension = d;
  f.evaluate = [](std::span<const double>) { return 1.0; };
  f.symmetry = d >= 3 ? Symmetry::isotropic3 : Symmetry::symmetric;
  f.decay = {1.0, 0.0};
  return f;
}

Field radial_gaussian(int d) {
  Field f;
  f.dimension = d;
  f.evaluate = [](std::span<const double> x) { return std::exp(-M_PI * norm2(x)); };
  f.symmetry = d >= 3 ? Symmetry::isotropic3 : Symmetry::symmetric;
  f.decay = {1.0, 8.0};
  return f;
}

Field radial_cauchy(int d) {
  Field f;
  f.dimension = d;
  f.evaluate = [](std::span<const double> x) { return 1.0 / (1.0 + norm2(x)); };
  f.symmetry = d >= 3 ? Symmetry::isotropic3 : Symmetry::symmetric;
  f.decay = {1.0, 2.0};
  return f;
}

Field radial_gaussian_floor(int d, double floor) {
  Field f;
  f.dimension = d;
  f.evaluate = [floor](std::span<const double> x) {
    return floor + std::exp(-M_PI * norm2(x));
  };
  f.symmetry = d >= 3 ? Symmetry::isotropic3 : Symmetry::symmetric;
  f.decay = {1.0 + floor, 0.0};
  return f;
}

Field bump(int d, double radius) {
  Field f;
  f.dimension = d;
  double r2 = radius * radius;
  f.evaluate = [r2](std::span<const double> x) { return bump_profile(norm2(x) / r2); };
  f.symmetry = d >= 3 ? Symmetry::isotropic3 : Symmetry::symmetric;
  f.decay = {1.0, 50.0};
  return f;
}

Field bump_plus_odd(int d, double radius) {
  Field f;
  f.dimension = d;
  double r2 = radius * radius;
  f.evaluate = [r2](std::span<const double> x) {
    double b = bump_profile(norm2(x) / r2);
    return b + 0.5 * x[0] * b;
  };
  f.symmetry = Symmetry::none;
  f.decay = {2.0, 50.0};
  return f;
}

Field truncated_gaussian(int d, double cutoff) {
  Field f;
  f.dimension = d;
  double c2 = cutoff * cutoff;
  f.evaluate = [c2](std::span<const double> x) {
    double r2 = norm2(x);
    return r2 <= c2 ? std::exp(-M_PI * r2) : 0.0;
  };
  f.symmetry = d >= 3 ? Symmetry::isotropic3 : Symmetry::symmetric;
  f.smoothness = 0.0;
  f.decay = {1.0, 50.0};
  return f;
}

Field cyl_rho2() {
  Field f;
  f.dimension = 2;
  f.evaluate = [](std::span<const double> x) { return x[0] * x[0]; };
  return f;
}

Field cyl_one() {
  Field f;
  f.dimension = 2;
  f.evaluate = [](std::span<const double>) { return 1.0; };
  return f;
}

Field cyl_rho2_z() {
  Field f;
  f.dimension = 2;
  f.evaluate = [](std::span<const double> x) { return x[0] * x[0] * x[1]; };
  return f;
}

Field cyl_smooth() {
  Field f;
  f.dimension = 2;
  f.evaluate = [](std::span<const double> x) {
    return std::exp(-x[0]) * std::cos(x[1]);
  };
  return f;
}

Field antisymmetric_by_name(const std::string& name, int n) {
  if (name == "x1_gaussian") return x1_gaussian(n);
  if (name == "x1") return x1_linear(n);
  if (name == "x1_cauchy") return x1_cauchy(n);
  if (name == "x1_poly_gaussian") return x1_poly_gaussian(n);
  if (name == "x1_bump") return x1_bump(n, 2.0);
  throw ScenarioError("unknown antisymmetric field: " + name);
}

Field vtilde_by_name(const std::string& name, int d) {
  if (name == "one") return one(d);
  if (name == "gaussian") return radial_gaussian(d);
  if (name == "cauchy") return radial_cauchy(d);
  if (name == "gaussian_floor") return radial_gaussian_floor(d, 0.1);
  throw ScenarioError("unknown vtilde profile: " + name);
}

Field cylinder_by_name(const std::string& name) {
  if (name == "rho2") return cyl_rho2();
  if (name == "one") return cyl_one();
  if (name == "rho2_z") return cyl_rho2_z();
  if (name == "smooth") return cyl_smooth();
  throw ScenarioError("unknown cylindrical field: " + name);
}

}  // namespace fields
}  // namespace levylift
