#ifndef LEVYLIFT_QUADRATURE_HPP
#define LEVYLIFT_QUADRATURE_HPP

#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "levylift/errors.hpp"
#include "levylift/parallel.hpp"

namespace levylift {

// Node budgets and tolerance targets for all singular / truncated integrals.
// Node sets are fully determined by the spec values, so results are
// bit-reproducible across thread counts.
struct QuadratureSpec {
  double split_radius = 0.5;       // singular core / far field boundary
  int core_nodes = 48;             // radial panels inside the core
  int shell_nodes = 48;            // radial panels core..truncation
  int angular_nodes = 32;          // polar resolution of sphere rules
  double truncation_radius = 64.0;
  double target_tol = 1e-9;
  double taylor_radius = 1e-4;     // second-difference Taylor ball
  double fd_step = 1e-3;           // Laplacian finite differences
  int gl_order = 8;                // nodes per radial panel
};

// Gauss-Legendre nodes/weights on [-1,1], cached per order.
const std::vector<double>& gl_nodes(int order);
const std::vector<double>& gl_weights(int order);

std::vector<double> linear_edges(double a, double b, int panels);
std::vector<double> log_edges(double a, double b, int panels);
// b*(j/J)^p for j=0..J; edges[0] = 0.
std::vector<double> graded_edges(double b, int panels, double exponent);

// Fixed-panel Gauss-Legendre integration. Evaluations run through the
// parallel batch engine; pass serial=true to force the reference path.
double integrate_panels(const std::function<double(double)>& f,
                        std::span<const double> edges, int order,
                        bool serial = false);

// Adaptive bisection with nested GL8/GL16 error estimate.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol, int max_depth = 48);

struct OscResult {
  double value = 0.0;
  bool converged = false;
  int panels = 0;
};

// Integrates f over [a, inf) on half-period panels. Stops when three
// consecutive partial sums agree within tol; the returned value is the
// repeated-averaging (Euler-style) acceleration of the partial-sum tail.
OscResult integrate_oscillatory(const std::function<double(double)>& f,
                                double a, double half_period, double tol,
                                int max_panels = 4000);

// Directions and weights of a product quadrature on S^{d-1}; weights sum to
// sphere_area(d). d=1 is the two-point rule collapsed onto +e1 (weight 2),
// usable only for integrands symmetric under z -> -z.
struct SphereRule {
  int dimension = 1;
  std::vector<std::array<double, 4>> dirs;
  std::vector<double> weights;
};

SphereRule sphere_rule(int d, int polar_nodes);

}  // namespace levylift

#endif
