#ifndef LEVYLIFT_SPECIAL_FUNCTIONS_HPP
#define LEVYLIFT_SPECIAL_FUNCTIONS_HPP

namespace levylift {

// Order nu = twice_order/2; integer and half-integer orders with nu >= -1/2.
struct BesselOrder {
  int twice_order = 0;
  constexpr double value() const { return 0.5 * twice_order; }
};

// J_nu(x) for nu in {-1/2, 0, 1/2, 1, ..., 15/2}, x >= 0.
// Absolute error <= 1e-10 for x <= 50, relative (to the oscillation
// envelope) <= 1e-8 beyond.
double bessel_j(BesselOrder nu, double x);

inline double bessel_j(double nu, double x) {
  return bessel_j(BesselOrder{static_cast<int>(2.0 * nu + (nu < 0 ? -0.5 : 0.5))}, x);
}

// ln Gamma(x), x > 0, relative error <= 1e-12.
double log_gamma(double x);
double gamma_pos(double x);

// H^{d-1}(S^{d-1}) = 2 pi^{d/2} / Gamma(d/2), 1 <= d <= 16.
double sphere_area(int d);
// Lebesgue volume of the unit ball in R^d.
double ball_volume(int d);

// c_n = 1/(2^{n/2-1} Gamma(n/2)), the tau->0 limit of x^{1-n/2} J_{n/2-1}(x).
double hankel_bracket_limit(int n);
// c_n - x^{1-n/2} J_{n/2-1}(x)
double hankel_bracket(int n, double x);
// 4-term small-x series of the bracket (use for x <= 1)
double hankel_bracket_series(int n, double x);
// coefficient of x^{2k} in the bracket series, k >= 1
double hankel_bracket_series_coeff(int n, int k);

}  // namespace levylift

#endif
