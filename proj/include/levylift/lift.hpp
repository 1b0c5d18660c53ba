#ifndef LEVYLIFT_LIFT_HPP
#define LEVYLIFT_LIFT_HPP

#include <vector>

#include "levylift/field.hpp"
#include "levylift/quadrature.hpp"

namespace levylift {

// Radius below which the lifted field switches to the d_1 u limit.
inline constexpr double kDegenerateRadius = 1e-6;

struct WeightedMeasureSpec {
  int dimension = 1;
  double alpha = 4.0;  // d mu = dx / (1+|x|)^alpha
};

// Antisymmetric u on R^n -> 3-isotropic v~ on R^{n+2},
// v~(x~) = u(rho, x') / rho with rho = |(x~1, x~2, x~3)|.
Field lift_field(const Field& u);

// 3-isotropic v on R^{n+2} -> antisymmetric u(x) = x1 v((x1,0,0), x').
Field restrict_field(const Field& v);

// f on R^{n+2} -> n-dimensional representative of its 3-isotropic
// symmetrization, f_sym(x) = (1/4pi) int_{S^2} f(|x1| z, x2..xn) dH^2(z).
Field isotropic_symmetrize(const Field& f, const QuadratureSpec& spec = {});

// Even-in-x1 f on R^n -> its 3-isotropic extension on R^{n+2}.
Field extend_isotropic3(const Field& f);

Field antisymmetric_part(const Field& g);

// 4 pi int |x1| |u| (1+|x|)^{-(n+2+2s)} dx  (n = u.dimension, n <= 2)
double weighted_norm_As(const Field& u, double s, const QuadratureSpec& spec = {});

// int |v| (1+|x~|)^{-(n+2+2s)} dx~ over R^{n+2}; isotropic3 fields reduce to
// 4 pi int tau^2 ... (v.dimension = n+2, n <= 2)
double weighted_norm_Ls(const Field& v, double s, const QuadratureSpec& spec = {});

// ||f||_{L^1(mu)} with d mu = dx/(1+|x|)^alpha; d = 1 or 3-isotropic d = 3.
double weighted_l1_norm(const Field& f, const WeightedMeasureSpec& mu,
                        const QuadratureSpec& spec = {});

// v * eta_eps with the standard unit-mass bump mollifier.
Field mollify(const Field& v, double eps, const QuadratureSpec& spec = {});

// ||v * eta_eps - v||_{L^1(mu)} for each eps in the schedule.
std::vector<double> mollifier_convergence_report(
    const Field& v, const WeightedMeasureSpec& mu,
    std::span<const double> eps_schedule, const QuadratureSpec& spec = {});

}  // namespace levylift

#endif
