#include "levylift/lift.hpp"

#include <algorithm>
#include <cmath>

#include "levylift/errors.hpp"
#include "levylift/special_functions.hpp"

namespace levylift {

Field lift_field(const Field& u) {
  if (u.symmetry != Symmetry::antisymmetric)
    throw std::invalid_argument("lift_field: input must be antisymmetric");
  const int n = u.dimension;
  Field v;
  v.dimension = n + 2;
  v.symmetry = Symmetry::isotropic3;
  v.smoothness = u.smoothness;
  // |u| <= C(1+|x|)^{-p} and the x1 factor give the lifted profile one more
  // power of decay off the degenerate set; keep the conservative same rate.
  v.decay = u.decay;
  Field uc = u;
  v.evaluate = [uc, n](std::span<const double> xt) {
    double rho2 = xt[0] * xt[0] + xt[1] * xt[1] + xt[2] * xt[2];
    double rho = std::sqrt(rho2);
    std::array<double, 8> p{};
    p[0] = rho;
    for (int i = 3; i < n + 2; ++i) p[i - 2] = xt[i];
    std::span<const double> pv(p.data(), static_cast<std::size_t>(n));
    if (rho >= kDegenerateRadius) return uc.evaluate(pv) / rho;
    if (!uc.normal_derivative)
      throw MissingNormalDerivative(
          "lift_field: evaluation within the degenerate set needs d1 u");
    std::span<const double> xp(p.data() + 1, static_cast<std::size_t>(n - 1));
    double d1 = uc.normal_derivative(xp);
    // first-order correction in rho^2, matching the value at the boundary
    p[0] = kDegenerateRadius;
    double boundary = uc.evaluate(pv) / kDegenerateRadius;
    double t = rho2 / (kDegenerateRadius * kDegenerateRadius);
    return d1 + t * (boundary - d1);
  };
  return v;
}

Field restrict_field(const Field& v) {
  if (v.symmetry != Symmetry::isotropic3)
    throw std::invalid_argument("restrict_field: input must be 3-isotropic");
  const int d = v.dimension;
  const int n = d - 2;
  Field u;
  u.dimension = n;
  u.symmetry = Symmetry::antisymmetric;
  u.smoothness = v.smoothness;
  u.decay = {v.decay.constant, v.decay.rate - 1.0};
  Field vc = v;
  u.evaluate = [vc, n](std::span<const double> x) {
    std::array<double, 8> p{};
    p[0] = x[0];
    p[1] = 0.0;
    p[2] = 0.0;
    for (int i = 1; i < n; ++i) p[i + 2] = x[i];
    std::span<const double> pv(p.data(), static_cast<std::size_t>(n + 2));
    return x[0] * vc.evaluate(pv);
  };
  u.normal_derivative = [vc, n](std::span<const double> xp) {
    std::array<double, 8> p{};
    for (int i = 0; i < n - 1; ++i) p[i + 3] = xp[i];
    std::span<const double> pv(p.data(), static_cast<std::size_t>(n + 2));
    return vc.evaluate(pv);  // d1 [x1 v] (0, x') = v((0,0,0), x')
  };
  return u;
}

Field isotropic_symmetrize(const Field& f, const QuadratureSpec& spec) {
  const int d = f.dimension;
  const int n = d - 2;
  if (n < 1) throw std::invalid_argument("isotropic_symmetrize: dimension < 3");
  SphereRule rule = sphere_rule(3, spec.angular_nodes);
  Field g;
  g.dimension = n;
  g.symmetry = Symmetry::symmetric;
  g.smoothness = f.smoothness;
  g.decay = f.decay;
  Field fc = f;
  g.evaluate = [fc, rule, n](std::span<const double> x) {
    double a = std::abs(x[0]);
    std::array<double, 8> p{};
    for (int i = 1; i < n; ++i) p[i + 2] = x[i];
    std::span<const double> pv(p.data(), static_cast<std::size_t>(n + 2));
    double acc = 0.0;
    for (std::size_t k = 0; k < rule.dirs.size(); ++k) {
      p[0] = a * rule.dirs[k][0];
      p[1] = a * rule.dirs[k][1];
      p[2] = a * rule.dirs[k][2];
      acc += rule.weights[k] * fc.evaluate(pv);
    }
    return acc / (4.0 * M_PI);
  };
  return g;
}

Field extend_isotropic3(const Field& f) {
  const int n = f.dimension;
  Field g;
  g.dimension = n + 2;
  g.symmetry = Symmetry::isotropic3;
  g.smoothness = f.smoothness;
  g.decay = f.decay;
  Field fc = f;
  g.evaluate = [fc, n](std::span<const double> xt) {
    double rho = std::sqrt(xt[0] * xt[0] + xt[1] * xt[1] + xt[2] * xt[2]);
    std::array<double, 8> p{};
    p[0] = rho;
    for (int i = 3; i < n + 2; ++i) p[i - 2] = xt[i];
    std::span<const double> pv(p.data(), static_cast<std::size_t>(n));
    return fc.evaluate(pv);
  };
  return g;
}

Field antisymmetric_part(const Field& g) {
  Field a;
  a.dimension = g.dimension;
  a.symmetry = Symmetry::antisymmetric;
  a.smoothness = g.smoothness;
  a.decay = g.decay;
  Field gc = g;
  a.evaluate = [gc](std::span<const double> x) {
    std::array<double, 8> p{};
    std::copy(x.begin(), x.end(), p.begin());
    std::span<const double> pv(p.data(), x.size());
    double plus = gc.evaluate(pv);
    p[0] = -p[0];
    double minus = gc.evaluate(pv);
    return 0.5 * (plus - minus);
  };
  a.normal_derivative = [gc](std::span<const double> xp) {
    std::array<double, 8> p{};
    std::copy(xp.begin(), xp.end(), p.begin() + 1);
    Field tmp = gc;
    std::span<const double> pv(p.data(), xp.size() + 1);
    return fd_partial(tmp, pv, 0, 1e-5);
  };
  return a;
}

namespace {

// Radial cut for an integrand bounded by C r^growth (1+r)^{-pw-rate}.
// Throws NonIntegrable when the bound cannot converge; caps the cut and
// relies on the power-law tail continuation beyond it.
double outer_cut(const DecayBound& decay, double pw, double growth, double tol) {
  double p = pw + decay.rate;
  if (p - growth <= 1.0)
    throw NonIntegrable("weighted norm: tail estimate diverges");
  double X = 16.0;
  for (int i = 0; i < 16; ++i) {
    double tail =
        std::max(1.0, decay.constant) * std::pow(1.0 + X, growth - p + 1.0) / (p - growth - 1.0);
    if (tail < tol) break;
    X *= 2.0;
  }
  return X;
}

// [0,4] linear + [4,X] log edges
std::vector<double> radial_edges(double X, int panels) {
  if (X <= 4.0) return linear_edges(0.0, X, panels);
  auto e = linear_edges(0.0, 4.0, panels / 2);
  auto tail = log_edges(4.0, X, panels / 2);
  e.insert(e.end(), tail.begin() + 1, tail.end());
  return e;
}

// power-law continuation of the radial integrand beyond X: the integrand is
// assumed ~ f(X) (r/X)^{growth - p} with p - growth > 1
double tail_continuation(double fX, double X, double decay_exponent) {
  if (decay_exponent <= 1.0) return 0.0;
  return fX * X / (decay_exponent - 1.0);
}

}  // namespace

double weighted_norm_As(const Field& u, double s, const QuadratureSpec& spec) {
  (void)spec;
  const int n = u.dimension;
  const double w = n + 2.0 + 2.0 * s;
  // integrand <= C r^n (1+r)^{-(w + rate)} after the polar Jacobian
  double X = outer_cut(u.decay, w, n, 1e-12);
  std::function<double(double)> f;
  if (n == 1) {
    f = [&u, w](double r) {
      double a[1] = {r};
      double b[1] = {-r};
      double wf = r / std::pow(1.0 + r, w);
      return wf * (std::abs(u.evaluate(std::span<const double>(a, 1))) +
                   std::abs(u.evaluate(std::span<const double>(b, 1))));
    };
  } else if (n == 2) {
    // quadrant arcs keep |x1| = r|cos t| smooth per panel
    const auto& tx = gl_nodes(24);
    const auto& tw = gl_weights(24);
    auto th = std::make_shared<std::vector<std::pair<double, double>>>();
    for (int q = 0; q < 4; ++q) {
      double a = 0.5 * M_PI * q, b = 0.5 * M_PI * (q + 1);
      for (int i = 0; i < 24; ++i)
        th->emplace_back(0.5 * (a + b) + 0.5 * (b - a) * tx[i],
                         0.5 * (b - a) * tw[i]);
    }
    f = [&u, w, th](double r) {
      double wf = r * r / std::pow(1.0 + r, w);
      double acc = 0.0;
      for (const auto& [t, wt] : *th) {
        double p[2] = {r * std::cos(t), r * std::sin(t)};
        acc += wt * std::abs(std::cos(t)) *
               std::abs(u.evaluate(std::span<const double>(p, 2)));
      }
      return wf * acc;
    };
  } else {
    throw std::invalid_argument("weighted_norm_As: n <= 2 supported");
  }
  auto edges = radial_edges(X, 160);
  double body = integrate_panels(f, edges, 12);
  double tail = tail_continuation(f(X), X, w + u.decay.rate - n);
  return 4.0 * M_PI * (body + tail);
}

double weighted_norm_Ls(const Field& v, double s, const QuadratureSpec& spec) {
  (void)spec;
  const int d = v.dimension;
  const int n = d - 2;
  const double w = n + 2.0 + 2.0 * s;
  if (v.symmetry != Symmetry::isotropic3)
    throw std::invalid_argument("weighted_norm_Ls: field must be 3-isotropic");
  double X = outer_cut(v.decay, w, d - 1, 1e-12);
  if (n == 1) {
    auto f = [&v, w](double tau) {
      double p[3] = {tau, 0.0, 0.0};
      return tau * tau * std::abs(v.evaluate(std::span<const double>(p, 3))) /
             std::pow(1.0 + tau, w);
    };
    auto edges = radial_edges(X, 200);
    double body = integrate_panels(f, edges, 10);
    double tail = tail_continuation(f(X), X, w + v.decay.rate - (d - 1));
    return 4.0 * M_PI * (body + tail);
  }
  if (n == 2) {
    auto f = [&v, w, X](double tau) {
      auto g = [&](double b) {
        double p[4] = {tau, 0.0, 0.0, b};
        double rr = std::sqrt(tau * tau + b * b);
        return std::abs(v.evaluate(std::span<const double>(p, 4))) /
               std::pow(1.0 + rr, w);
      };
      auto bedges = linear_edges(-X, X, 96);
      return tau * tau * integrate_panels(g, bedges, 10, /*serial=*/true);
    };
    auto edges = radial_edges(X, 96);
    return 4.0 * M_PI * integrate_panels(f, edges, 10);
  }
  throw std::invalid_argument("weighted_norm_Ls: n <= 2 supported");
}

double weighted_l1_norm(const Field& f, const WeightedMeasureSpec& mu,
                        const QuadratureSpec& spec) {
  (void)spec;
  if (mu.dimension != f.dimension)
    throw std::invalid_argument("weighted_l1_norm: dimension mismatch");
  if (f.dimension == 1) {
    double X = outer_cut(f.decay, mu.alpha, 0.0, 1e-10);
    auto g = [&f, &mu](double x) {
      double p[1] = {x};
      return std::abs(f.evaluate(std::span<const double>(p, 1))) /
             std::pow(1.0 + std::abs(x), mu.alpha);
    };
    std::vector<double> edges = radial_edges(X, 200);
    double body = integrate_panels(g, edges, 8);
    std::vector<double> neg(edges.rbegin(), edges.rend());
    for (auto& e : neg) e = -e;
    body += integrate_panels(g, neg, 8);
    return body + 2.0 * tail_continuation(g(X), X, mu.alpha + f.decay.rate);
  }
  if (f.dimension == 3 && f.symmetry == Symmetry::isotropic3) {
    double X = outer_cut(f.decay, mu.alpha, 2.0, 1e-10);
    auto g = [&f, &mu](double tau) {
      double p[3] = {tau, 0.0, 0.0};
      return tau * tau * std::abs(f.evaluate(std::span<const double>(p, 3))) /
             std::pow(1.0 + tau, mu.alpha);
    };
    auto edges = radial_edges(X, 200);
    double body = integrate_panels(g, edges, 8);
    double tail = tail_continuation(g(X), X, mu.alpha + f.decay.rate - 2.0);
    return 4.0 * M_PI * (body + tail);
  }
  throw std::invalid_argument(
      "weighted_l1_norm: supported for d=1 or 3-isotropic d=3");
}

namespace {

struct BallRule {
  std::vector<std::array<double, 4>> pts;  // points in the unit ball
  std::vector<double> w;                   // includes the radial Jacobian
};

BallRule ball_rule(int d, int radial, int polar) {
  BallRule rule;
  const auto& rx = gl_nodes(radial);
  const auto& rw = gl_weights(radial);
  SphereRule ang = sphere_rule(d, polar);
  for (int i = 0; i < radial; ++i) {
    double t = 0.5 * (rx[i] + 1.0);
    double wt = 0.5 * rw[i] * std::pow(t, d - 1.0);
    for (std::size_t k = 0; k < ang.dirs.size(); ++k) {
      std::array<double, 4> p{};
      for (int c = 0; c < d; ++c) p[c] = t * ang.dirs[k][c];
      rule.pts.push_back(p);
      rule.w.push_back(wt * ang.weights[k]);
    }
  }
  if (d == 1) {
    // the collapsed two-point sphere rule only covers +e1; mirror explicitly
    std::size_t m = rule.pts.size();
    for (std::size_t i = 0; i < m; ++i) {
      auto p = rule.pts[i];
      p[0] = -p[0];
      rule.pts.push_back(p);
      rule.w.push_back(rule.w[i]);
    }
    for (auto& wv : rule.w) wv *= 0.5;
  }
  return rule;
}

double mollifier_raw(std::span<const double> z) {
  double r2 = norm2(z);
  if (r2 >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - r2));
}

double mollifier_mass(int d, const BallRule& rule) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.pts.size(); ++i)
    acc += rule.w[i] *
           mollifier_raw(std::span<const double>(rule.pts[i].data(), d));
  return acc;
}

}  // namespace

Field mollify(const Field& v, double eps, const QuadratureSpec& spec) {
  if (!(eps > 0.0) || eps > 1.0)
    throw std::invalid_argument("mollify: eps in (0, 1]");
  const int d = v.dimension;
  if (d > 3) throw std::invalid_argument("mollify: d <= 3 supported");
  auto rule = std::make_shared<BallRule>(ball_rule(d, 24, spec.angular_nodes / 2));
  double mass = mollifier_mass(d, *rule);
  Field out;
  out.dimension = d;
  out.symmetry = v.symmetry;
  out.smoothness = std::numeric_limits<double>::infinity();
  out.decay = v.decay;
  Field vc = v;
  out.evaluate = [vc, rule, mass, eps, d](std::span<const double> x) {
    double acc = 0.0;
    std::array<double, 8> p{};
    std::span<const double> pv(p.data(), static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < rule->pts.size(); ++i) {
      const auto& z = rule->pts[i];
      double eta = mollifier_raw(std::span<const double>(z.data(), d));
      if (eta == 0.0) continue;
      for (int c = 0; c < d; ++c) p[c] = x[c] - eps * z[c];
      acc += rule->w[i] * eta * vc.evaluate(pv);
    }
    return acc / mass;
  };
  return out;
}

std::vector<double> mollifier_convergence_report(
    const Field& v, const WeightedMeasureSpec& mu,
    std::span<const double> eps_schedule, const QuadratureSpec& spec) {
  std::vector<double> out;
  out.reserve(eps_schedule.size());
  for (double eps : eps_schedule) {
    Field m = mollify(v, eps, spec);
    Field diff;
    diff.dimension = v.dimension;
    diff.symmetry = v.symmetry;
    diff.decay = {2.0 * std::max(v.decay.constant, 1.0), v.decay.rate};
    Field vc = v;
    diff.evaluate = [m, vc](std::span<const double> x) {
      return m.evaluate(x) - vc.evaluate(x);
    };
    out.push_back(weighted_l1_norm(diff, mu, spec));
  }
  return out;
}

}  // namespace levylift
