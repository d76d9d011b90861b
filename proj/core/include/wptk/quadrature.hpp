#pragma once

#include <span>
#include <vector>

namespace wptk {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [lo, hi].
QuadratureRule gauss_legendre(int n, double lo = -1.0, double hi = 1.0);

/// Least-squares slope of ys against xs.
double least_squares_slope(std::span<const double> xs, std::span<const double> ys);

/// Running trapezoid integral: out[k] = int_{s[0]}^{s[k]} f.
std::vector<double> cumulative_trapezoid(std::span<const double> s, std::span<const double> f);

}  // namespace wptk
