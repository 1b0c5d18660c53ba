#include "levylift/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "levylift/errors.hpp"
#include "levylift/special_functions.hpp"

namespace levylift {

double RadialKernel::deriv(double r) const {
  if (derivative) return derivative(r);
  double h = std::max(1e-5, 1e-5 * r);
  if (r - h <= 0.0) h = 0.5 * r;
  return (profile(r + h) - profile(r - h)) / (2.0 * h);
}

double fractional_constant(int n, double s) {
  if (n < 1 || n > 8) throw std::invalid_argument("fractional_constant: 1 <= n <= 8");
  if (!(s > 0.0 && s < 1.0))
    throw std::invalid_argument("fractional_constant: s in (0,1)");
  // |Gamma(-s)| = Gamma(2-s) / (s (1-s)) for s in (0,1)
  double abs_gamma_ms = gamma_pos(2.0 - s) / (s * (1.0 - s));
  return std::pow(4.0, s) * gamma_pos(0.5 * n + s) /
         (std::pow(M_PI, 0.5 * n) * abs_gamma_ms);
}

RadialKernel fractional_kernel(int n, double s) {
  double C = fractional_constant(n, s);
  double expo = -(n + 2.0 * s);
  RadialKernel K;
  K.dimension = n;
  K.profile = [C, expo](double r) { return C * std::pow(r, expo); };
  K.derivative = [C, expo](double r) { return C * expo * std::pow(r, expo - 1.0); };
  K.decay_rate = 2.0 * s;
  K.singularity_order = 2.0 * s;
  return K;
}

RadialKernel gaussian_kernel(int n) {
  RadialKernel K;
  K.dimension = n;
  K.profile = [](double r) { return std::exp(-M_PI * r * r); };
  K.derivative = [](double r) { return -2.0 * M_PI * r * std::exp(-M_PI * r * r); };
  K.decay_rate = 50.0;  // super-polynomial; any large exponent is a valid bound
  K.singularity_order = 0.0;
  return K;
}

RadialKernel table_kernel(int n, std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 2)
    throw std::invalid_argument("table_kernel: need at least two samples");
  std::sort(samples.begin(), samples.end());
  for (auto& [r, v] : samples)
    if (r <= 0.0 || v <= 0.0)
      throw std::invalid_argument("table_kernel: samples must be positive");
  // log-log linear interpolation, end slopes extrapolated
  std::vector<double> lr(samples.size()), lv(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    lr[i] = std::log(samples[i].first);
    lv[i] = std::log(samples[i].second);
  }
  auto eval = [lr, lv](double r) {
    double x = std::log(r);
    std::size_t n = lr.size();
    std::size_t i = 1;
    while (i + 1 < n && lr[i] < x) ++i;
    double t = (x - lr[i - 1]) / (lr[i] - lr[i - 1]);
    return std::exp(lv[i - 1] + t * (lv[i] - lv[i - 1]));
  };
  double head_slope = (lv[1] - lv[0]) / (lr[1] - lr[0]);
  double tail_slope =
      (lv[lv.size() - 1] - lv[lv.size() - 2]) / (lr[lr.size() - 1] - lr[lr.size() - 2]);
  RadialKernel K;
  K.dimension = n;
  K.profile = eval;
  K.decay_rate = std::max(0.0, -tail_slope - n);
  K.singularity_order = std::max(0.0, -head_slope - n);
  return K;
}

double kernel_second_moment(const RadialKernel& K, double t,
                            const QuadratureSpec& spec) {
  if (t <= 0.0) return 0.0;
  const int n = K.dimension;
  double rf = 1e-6 * t;
  // below rf: K(r) ~ K(rf) (r/rf)^{-n-sigma}
  double sigma = K.singularity_order;
  double head = 0.0;
  if (2.0 - sigma <= 1e-9)
    throw DivergentKernel("kernel_second_moment: singularity order >= 2");
  head = K.profile(rf) * std::pow(rf, n + 2.0) / (2.0 - sigma);
  auto f = [&](double r) { return std::pow(r, n + 1.0) * K.profile(r); };
  auto edges = log_edges(rf, t, std::max(24, spec.core_nodes / 2));
  return head + integrate_panels(f, edges, spec.gl_order);
}

double kernel_tail_mass(const RadialKernel& K, double T,
                        const QuadratureSpec& spec) {
  const int n = K.dimension;
  if (K.decay_rate <= 0.0)
    throw TailDivergence("kernel_tail_mass: nonpositive decay rate");
  auto f = [&](double r) { return std::pow(r, n - 1.0) * K.profile(r); };
  double T2 = 8.0 * T;
  auto edges = log_edges(T, T2, std::max(16, spec.shell_nodes / 2));
  double body = integrate_panels(f, edges, spec.gl_order);
  // model tail: K(r) ~ K(T2) (r/T2)^{-n-d}, so int_T2^inf r^{n-1} K = K(T2) T2^n / d
  double model = K.profile(T2) * std::pow(T2, static_cast<double>(n)) / K.decay_rate;
  return body + model;
}

double check_levy_integrability(const RadialKernel& K, const QuadratureSpec& spec) {
  const int n = K.dimension;
  // near-zero envelope probe on dyadic radii
  double r0 = std::pow(2.0, -20.0);
  double gprev = std::pow(r0, n + 1.0) * K.profile(r0);
  for (int k = 19; k >= 2; --k) {
    double r = std::pow(2.0, -static_cast<double>(k));
    double g = std::pow(r, n + 1.0) * K.profile(r);
    if (gprev > 0.0 && g > 0.0) {
      double slope = std::log2(g / gprev);  // consecutive radii differ by 2
      if (slope <= -1.0 + 1e-3)
        throw DivergentKernel("check_levy_integrability: integrand exceeds r^{-1+eps} near 0");
    }
    gprev = g;
  }
  if (K.decay_rate <= 0.0)
    throw DivergentKernel("check_levy_integrability: tail bound is infinite");
  double core = kernel_second_moment(K, 1.0, spec);
  double tail = kernel_tail_mass(K, 1.0, spec);
  return sphere_area(n) * (core + tail);
}

RadialKernel lift_kernel(const RadialKernel& K) {
  for (int k = -20; k <= 20; ++k) {
    double r = std::pow(2.0, static_cast<double>(k));
    if (K.deriv(r) > 1e-14 * std::max(1.0, std::abs(K.profile(r))))
      throw NegativeKernel("lift_kernel: K' > 0 at probe radius, lifted density would be negative");
  }
  RadialKernel L;
  L.dimension = K.dimension + 2;
  L.profile = [K](double r) { return -K.deriv(r) / (2.0 * M_PI * r); };
  L.decay_rate = K.decay_rate;
  L.singularity_order = K.singularity_order;
  check_levy_integrability(L);
  return L;
}

RadialKernel unlift_kernel(const RadialKernel& K2, const QuadratureSpec& spec) {
  if (K2.decay_rate <= 0.0)
    throw TailDivergence("unlift_kernel: tail integral requires decay_rate > 0");
  const int n2 = K2.dimension;
  (void)spec;
  auto profile = [K2, n2](double r) {
    auto f = [&](double t) { return t * K2.profile(t); };
    double T = std::max(64.0, 8.0 * r);
    auto edges = log_edges(r, T, 64);
    double body = integrate_panels(f, edges, 12, /*serial=*/true);
    // model tail: int_T^inf t K2 dt with K2 ~ K2(T) (t/T)^{-n2-d}
    double d = K2.decay_rate;
    double expo = n2 + d - 2.0;
    if (expo <= 0.0) throw TailDivergence("unlift_kernel: tail fails to converge");
    double model = K2.profile(T) * T * T / expo;
    return 2.0 * M_PI * (body + model);
  };
  RadialKernel K;
  K.dimension = n2 - 2;
  K.profile = profile;
  // d/dr [2 pi int_r^inf t K2 dt] = -2 pi r K2(r), exact
  K.derivative = [K2](double r) { return -2.0 * M_PI * r * K2.profile(r); };
  K.decay_rate = K2.decay_rate;
  K.singularity_order = std::max(0.0, K2.singularity_order);
  return K;
}

bool kernel_nonincreasing(const RadialKernel& K) {
  for (int k = -20; k <= 20; ++k) {
    double r = std::pow(2.0, static_cast<double>(k));
    if (K.deriv(r) > 1e-14 * std::max(1.0, std::abs(K.profile(r)))) return false;
  }
  return true;
}

nlohmann::json kernel_to_json(const RadialKernel& K) {
  nlohmann::json j;
  j["family"] = "table";
  j["n"] = K.dimension;
  nlohmann::json samples = nlohmann::json::array();
  for (int k = -20; k <= 20; ++k) {
    double r = std::pow(2.0, 0.5 * k);
    samples.push_back({r, K.profile(r)});
  }
  j["samples"] = samples;
  return j;
}

RadialKernel kernel_from_json(const nlohmann::json& j) {
  std::string family = j.at("family").get<std::string>();
  int n = j.at("n").get<int>();
  if (family == "fractional") return fractional_kernel(n, j.at("s").get<double>());
  if (family == "gaussian") return gaussian_kernel(n);
  if (family == "table") {
    std::vector<std::pair<double, double>> samples;
    for (const auto& row : j.at("samples"))
      samples.emplace_back(row.at(0).get<double>(), row.at(1).get<double>());
    return table_kernel(n, samples);
  }
  throw std::invalid_argument("kernel_from_json: unknown family " + family);
}

}  // namespace levylift
