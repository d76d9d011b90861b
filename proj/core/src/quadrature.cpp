#include "wptk/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "wptk/error.hpp"

namespace wptk {

QuadratureRule gauss_legendre(int n, double lo, double hi) {
  if (n < 1) throw DomainError("gauss_legendre: need at least one node");
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const double mid = 0.5 * (hi + lo);
  const double half = 0.5 * (hi - lo);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    const auto a = static_cast<std::size_t>(i);
    const auto b = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[a] = mid - half * z;
    rule.nodes[b] = mid + half * z;
    rule.weights[a] = half * w;
    rule.weights[b] = half * w;
  }
  return rule;
}

double least_squares_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw ShapeError("least_squares_slope: need two or more paired samples");
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0.0) throw DomainError("least_squares_slope: abscissae coincide");
  return sxy / sxx;
}

std::vector<double> cumulative_trapezoid(std::span<const double> s, std::span<const double> f) {
  if (s.size() != f.size()) throw ShapeError("cumulative_trapezoid: size mismatch");
  std::vector<double> out(s.size(), 0.0);
  for (std::size_t k = 1; k < s.size(); ++k) {
    out[k] = out[k - 1] + 0.5 * (s[k] - s[k - 1]) * (f[k] + f[k - 1]);
  }
  return out;
}

}  // namespace wptk
