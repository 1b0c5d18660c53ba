#ifndef LEVYLIFT_KERNELS_HPP
#define LEVYLIFT_KERNELS_HPP

#include <functional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "levylift/quadrature.hpp"

namespace levylift {

// A radial jump-kernel profile K_n(r) with ambient dimension and decay
// metadata. Immutable after construction; all operations are pure.
struct RadialKernel {
  int dimension = 1;
  std::function<double(double)> profile;
  std::function<double(double)> derivative;  // empty -> central differences
  // profile(r) <= C r^{-dimension-decay_rate} for r >= 1
  double decay_rate = 0.0;
  // profile(r) ~ r^{-dimension-singularity_order} near 0
  double singularity_order = 0.0;

  double operator()(double r) const { return profile(r); }
  // analytic derivative when present, else central difference with
  // h = max(1e-5, 1e-5 r)
  double deriv(double r) const;
};

struct FractionalKernelSpec {
  int dimension = 1;
  double order = 0.5;     // s in (0,1)
  double constant = 0.0;  // C(n, s)
};

// C(n, s) = 4^s Gamma(n/2+s) / (pi^{n/2} |Gamma(-s)|); multiplier (2pi|xi|)^2s.
double fractional_constant(int n, double s);

RadialKernel fractional_kernel(int n, double s);
RadialKernel gaussian_kernel(int n);  // exp(-pi r^2)
RadialKernel table_kernel(int n, std::vector<std::pair<double, double>> samples);

// sphere_area(n) * int_0^inf min(1, r^2) K(r) r^{n-1} dr.
// Throws DivergentKernel on an r^{-1} (or worse) near-zero envelope or an
// unbounded tail estimate.
double check_levy_integrability(const RadialKernel& K,
                                const QuadratureSpec& spec = {});

// K_{n+2}(r) = -K_n'(r) / (2 pi r). Throws NegativeKernel when K_n' > 0 at a
// dyadic probe radius; the result is checked for Levy integrability.
RadialKernel lift_kernel(const RadialKernel& K);

// K_n(r) = 2 pi int_r^inf t K_{n+2}(t) dt (inverse of lift_kernel).
RadialKernel unlift_kernel(const RadialKernel& K2,
                           const QuadratureSpec& spec = {});

// int_0^t r^{n+1} K(r) dr with the near-zero singular model.
double kernel_second_moment(const RadialKernel& K, double t,
                            const QuadratureSpec& spec = {});
// int_T^inf r^{n-1} K(r) dr via panels plus the decay-rate tail model.
double kernel_tail_mass(const RadialKernel& K, double T,
                        const QuadratureSpec& spec = {});

// true if deriv(r) <= 0 at every dyadic probe 2^k, k = -20..20
bool kernel_nonincreasing(const RadialKernel& K);

nlohmann::json kernel_to_json(const RadialKernel& K);
RadialKernel kernel_from_json(const nlohmann::json& j);

}  // namespace levylift

#endif
