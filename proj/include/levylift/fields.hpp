#ifndef LEVYLIFT_FIELDS_HPP
#define LEVYLIFT_FIELDS_HPP

#include <string>

#include "levylift/field.hpp"

// Named closures used by the CLI scenario registry and the test suites.

namespace levylift::fields {

// antisymmetric fields on R^n
Field x1_gaussian(int n);          // x1 exp(-pi |x|^2)
Field x1_linear(int n);            // x1
Field x1_cauchy(int n);            // x1 / (1 + |x|^2)
Field x1_poly_gaussian(int n);     // x1 (1 + x1^2) exp(-pi |x|^2)
Field x1_bump(int n, double radius);

// even 1-d profiles for the Bochner check
Field even_gaussian_1d();          // exp(-pi x^2)
Field even_cauchy2_1d();           // (1 + x^2)^{-2}
Field even_gausscos_1d();          // exp(-x^2) cos x

// radial / isotropic fields on R^d
Field one(int d);
Field radial_gaussian(int d);      // exp(-pi |x|^2)
Field radial_cauchy(int d);        // (1 + |x|^2)^{-1}
Field radial_gaussian_floor(int d, double floor);  // floor + exp(-pi |x|^2)
Field bump(int d, double radius);
Field bump_plus_odd(int d, double radius);  // bump + x1 * bump / 2
Field truncated_gaussian(int d, double cutoff);

// cylindrical test profiles u(rho, z) as 2-d fields
Field cyl_rho2();
Field cyl_one();
Field cyl_rho2_z();
Field cyl_smooth();                // exp(-rho) cos z

// registry lookup for scenario files; throws ScenarioError on unknown names
Field antisymmetric_by_name(const std::string& name, int n);
Field vtilde_by_name(const std::string& name, int d);
Field cylinder_by_name(const std::string& name);

}  // namespace levylift::fields

#endif
