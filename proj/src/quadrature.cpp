#include "levylift/quadrature.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

#include "levylift/special_functions.hpp"

namespace levylift {

namespace {

// Legendre nodes by Newton iteration on P_n, seeded with the Chebyshev-like
// approximation of the k-th root.
void build_gl(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int k = 0; k < n; ++k) {
    double t = std::cos(M_PI * (k + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-16) break;
    }
    double p0 = 1.0, p1 = t;
    for (int j = 2; j <= n; ++j) {
      double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (t * p1 - p0) / (t * t - 1.0);
    x[n - 1 - k] = t;
    w[n - 1 - k] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

struct GlCache {
  std::map<int, std::pair<std::vector<double>, std::vector<double>>> table;
  std::mutex mu;
};

GlCache& gl_cache() {
  static GlCache c;
  return c;
}

const std::pair<std::vector<double>, std::vector<double>>& gl_pair(int order) {
  auto& c = gl_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto it = c.table.find(order);
  if (it == c.table.end()) {
    std::pair<std::vector<double>, std::vector<double>> p;
    build_gl(order, p.first, p.second);
    it = c.table.emplace(order, std::move(p)).first;
  }
  return it->second;
}

}  // namespace

const std::vector<double>& gl_nodes(int order) { return gl_pair(order).first; }
const std::vector<double>& gl_weights(int order) { return gl_pair(order).second; }

std::vector<double> linear_edges(double a, double b, int panels) {
  std::vector<double> e(panels + 1);
  for (int i = 0; i <= panels; ++i) e[i] = a + (b - a) * i / panels;
  return e;
}

std::vector<double> log_edges(double a, double b, int panels) {
  std::vector<double> e(panels + 1);
  double la = std::log(a), lb = std::log(b);
  for (int i = 0; i <= panels; ++i) e[i] = std::exp(la + (lb - la) * i / panels);
  e.front() = a;
  e.back() = b;
  return e;
}

std::vector<double> graded_edges(double b, int panels, double exponent) {
  std::vector<double> e(panels + 1);
  for (int i = 0; i <= panels; ++i)
    e[i] = b * std::pow(static_cast<double>(i) / panels, exponent);
  return e;
}

double integrate_panels(const std::function<double(double)>& f,
                        std::span<const double> edges, int order, bool serial) {
  if (edges.size() < 2) return 0.0;
  const auto& xs = gl_nodes(order);
  const auto& ws = gl_weights(order);
  const std::size_t panels = edges.size() - 1;
  const std::size_t m = panels * static_cast<std::size_t>(order);
  auto eval = [&](std::size_t i) {
    std::size_t p = i / order;
    std::size_t k = i % order;
    double mid = 0.5 * (edges[p] + edges[p + 1]);
    double half = 0.5 * (edges[p + 1] - edges[p]);
    return ws[k] * half * f(mid + half * xs[k]);
  };
  return serial ? par::map_sum_serial(m, eval) : par::map_sum(m, eval);
}

namespace {

double gl_fixed(const std::function<double(double)>& f, double a, double b,
                int order) {
  const auto& xs = gl_nodes(order);
  const auto& ws = gl_weights(order);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int k = 0; k < order; ++k) s += ws[k] * f(mid + half * xs[k]);
  return s * half;
}

double adaptive_rec(const std::function<double(double)>& f, double a, double b,
                    double tol, int depth) {
  double coarse = gl_fixed(f, a, b, 8);
  double fine = gl_fixed(f, a, b, 16);
  if (std::abs(fine - coarse) <= tol || depth <= 0) return fine;
  double m = 0.5 * (a + b);
  return adaptive_rec(f, a, m, 0.5 * tol, depth - 1) +
         adaptive_rec(f, m, b, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol, int max_depth) {
  if (a == b) return 0.0;
  return adaptive_rec(f, a, b, tol, max_depth);
}

OscResult integrate_oscillatory(const std::function<double(double)>& f,
                                double a, double half_period, double tol,
                                int max_panels) {
  OscResult r;
  std::vector<double> partial;
  partial.reserve(64);
  double acc = 0.0;
  int tiny_run = 0;
  for (int k = 0; k < max_panels; ++k) {
    double lo = a + k * half_period;
    double hi = lo + half_period;
    double p = gl_fixed(f, lo, hi, 16);
    acc += p;
    partial.push_back(acc);
    double scale = std::max(1.0, std::abs(acc));
    if (std::abs(p) < 1e-17 * scale) {
      if (++tiny_run >= 3) {
        r.value = acc;
        r.converged = true;
        r.panels = k + 1;
        return r;
      }
    } else {
      tiny_run = 0;
    }
    std::size_t m = partial.size();
    if (m >= 4) {
      double d1 = std::abs(partial[m - 1] - partial[m - 2]);
      double d2 = std::abs(partial[m - 2] - partial[m - 3]);
      double d3 = std::abs(partial[m - 3] - partial[m - 4]);
      // repeated averaging of the last few partial sums
      std::size_t win = std::min<std::size_t>(8, m);
      std::vector<double> t(partial.end() - win, partial.end());
      while (t.size() > 1) {
        for (std::size_t i = 0; i + 1 < t.size(); ++i)
          t[i] = 0.5 * (t[i] + t[i + 1]);
        t.pop_back();
      }
      if (d1 < tol && d2 < tol && d3 < tol) {
        r.value = t[0];
        r.converged = true;
        r.panels = k + 1;
        return r;
      }
      if (win == 8) {
        // accelerated convergence check for slowly alternating tails
        std::vector<double> t2(partial.end() - win, partial.end() - 1);
        while (t2.size() > 1) {
          for (std::size_t i = 0; i + 1 < t2.size(); ++i)
            t2[i] = 0.5 * (t2[i] + t2[i + 1]);
          t2.pop_back();
        }
        if (std::abs(t[0] - t2[0]) < 0.25 * tol && k > 16) {
          r.value = t[0];
          r.converged = true;
          r.panels = k + 1;
          return r;
        }
      }
    }
  }
  r.value = partial.empty() ? 0.0 : partial.back();
  r.converged = false;
  r.panels = max_panels;
  return r;
}

SphereRule sphere_rule(int d, int polar_nodes) {
  SphereRule rule;
  rule.dimension = d;
  if (d == 1) {
    rule.dirs.push_back({1.0, 0.0, 0.0, 0.0});
    rule.weights.push_back(2.0);
    return rule;
  }
  if (d == 2) {
    int m = 2 * polar_nodes;
    for (int j = 0; j < m; ++j) {
      double th = 2.0 * M_PI * (j + 0.5) / m;
      rule.dirs.push_back({std::cos(th), std::sin(th), 0.0, 0.0});
      rule.weights.push_back(2.0 * M_PI / m);
    }
    return rule;
  }
  if (d == 3) {
    const auto& xs = gl_nodes(polar_nodes);
    const auto& ws = gl_weights(polar_nodes);
    int m = 2 * polar_nodes;
    for (int i = 0; i < polar_nodes; ++i) {
      double t = xs[i];
      double st = std::sqrt(std::max(0.0, 1.0 - t * t));
      for (int j = 0; j < m; ++j) {
        double ph = 2.0 * M_PI * (j + 0.5) / m;
        rule.dirs.push_back({t, st * std::cos(ph), st * std::sin(ph), 0.0});
        rule.weights.push_back(ws[i] * 2.0 * M_PI / m);
      }
    }
    return rule;
  }
  if (d == 4) {
    // z = (cos chi, sin chi * omega), omega in S^2; dsigma = sin^2chi dchi dS2
    int nchi = polar_nodes / 2;
    int nth = polar_nodes / 2;
    int nph = polar_nodes;
    const auto& cx = gl_nodes(nchi);
    const auto& cw = gl_weights(nchi);
    const auto& tx = gl_nodes(nth);
    const auto& tw = gl_weights(nth);
    for (int i = 0; i < nchi; ++i) {
      double chi = 0.5 * M_PI * (cx[i] + 1.0);
      double wchi = 0.5 * M_PI * cw[i] * std::sin(chi) * std::sin(chi);
      double c = std::cos(chi), s = std::sin(chi);
      for (int j = 0; j < nth; ++j) {
        double t = tx[j];
        double st = std::sqrt(std::max(0.0, 1.0 - t * t));
        for (int k = 0; k < nph; ++k) {
          double ph = 2.0 * M_PI * (k + 0.5) / nph;
          rule.dirs.push_back(
              {c, s * t, s * st * std::cos(ph), s * st * std::sin(ph)});
          rule.weights.push_back(wchi * tw[j] * 2.0 * M_PI / nph);
        }
      }
    }
    return rule;
  }
  throw std::invalid_argument("sphere_rule: dimension must be 1..4");
}

}  // namespace levylift
