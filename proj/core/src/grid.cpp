#include "wptk/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wptk/error.hpp"

namespace wptk {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

Grid1D::Grid1D(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_(n_points), dx_(0.0) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min)) {
    throw ConfigurationError("grid: need finite x_max > x_min");
  }
  if (n_points < 16 || !is_power_of_two(n_points)) {
    throw ConfigurationError("grid: n_points must be a power of two >= 16, got " +
                             std::to_string(n_points));
  }
  dx_ = (x_max - x_min) / static_cast<double>(n_points);
}

std::vector<double> Grid1D::nodes() const {
  std::vector<double> xs(n_);
  for (std::size_t k = 0; k < n_; ++k) xs[k] = node(k);
  return xs;
}

double Grid1D::wavenumber(std::size_t m) const {
  const auto n = static_cast<double>(n_);
  const double mm = m < n_ / 2 ? static_cast<double>(m) : static_cast<double>(m) - n;
  return 2.0 * std::numbers::pi * mm / (n * dx_);
}

double Grid1D::nyquist() const { return std::numbers::pi / dx_; }

UniformAxis node_axis(const Grid1D& g, std::size_t stride) {
  if (stride == 0 || g.size() % stride != 0) {
    throw ConfigurationError("node axis: stride must divide the grid size");
  }
  return UniformAxis{g.x_min(), g.dx() * static_cast<double>(stride), g.size() / stride};
}

Grid1D make_grid(double x_min, double x_max, std::size_t n_points) {
  return Grid1D(x_min, x_max, n_points);
}

FrequencyGrid dual_frequency_grid(const Grid1D& g, double xi_lo, double xi_hi) {
  if (!(xi_hi >= xi_lo)) throw ConfigurationError("frequency grid: xi_hi < xi_lo");
  const double d_xi = 2.0 * std::numbers::pi / g.length();
  const auto half = static_cast<long long>(g.size() / 2);
  long long m_lo = static_cast<long long>(std::ceil(xi_lo / d_xi - 1e-9));
  long long m_hi = static_cast<long long>(std::floor(xi_hi / d_xi + 1e-9));
  m_lo = std::max(m_lo, -half);
  m_hi = std::min(m_hi, half - 1);
  if (m_hi < m_lo) throw ConfigurationError("frequency grid: empty range");
  return FrequencyGrid{static_cast<double>(m_lo) * d_xi, d_xi,
                       static_cast<std::size_t>(m_hi - m_lo + 1)};
}

FrequencyGrid full_dual_frequency_grid(const Grid1D& g) {
  const double d_xi = 2.0 * std::numbers::pi / g.length();
  const auto half = static_cast<double>(g.size() / 2);
  return FrequencyGrid{-half * d_xi, d_xi, g.size()};
}

}  // namespace wptk
