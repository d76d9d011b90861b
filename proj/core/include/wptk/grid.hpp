#pragma once

#include <cstddef>
#include <vector>

namespace wptk {

/// Uniform periodic grid: node k sits at x_min + k * dx, k = 0 .. n - 1.
class Grid1D {
 public:
  Grid1D(double x_min, double x_max, std::size_t n_points);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  std::size_t size() const { return n_; }
  double dx() const { return dx_; }
  double length() const { return x_max_ - x_min_; }
  double node(std::size_t k) const { return x_min_ + static_cast<double>(k) * dx_; }
  std::vector<double> nodes() const;

  /// Angular wavenumber of DFT bin m in FFTW order (m >= n/2 wraps negative).
  double wavenumber(std::size_t m) const;
  /// pi / dx.
  double nyquist() const;

  bool operator==(const Grid1D& other) const = default;

 private:
  double x_min_;
  double x_max_;
  std::size_t n_;
  double dx_;
};

Grid1D make_grid(double x_min, double x_max, std::size_t n_points);

/// Uniform axis v_j = start + j * step, j = 0 .. count - 1.
struct UniformAxis {
  double start = 0.0;
  double step = 1.0;
  std::size_t count = 0;

  double at(std::size_t j) const { return start + static_cast<double>(j) * step; }
  double last() const { return at(count == 0 ? 0 : count - 1); }
};

using FrequencyGrid = UniformAxis;

/// Every `stride`-th node of `g`, starting at node 0.
UniformAxis node_axis(const Grid1D& g, std::size_t stride);

/// The contiguous block of DFT-dual frequencies 2*pi*m/L lying in [xi_lo, xi_hi].
FrequencyGrid dual_frequency_grid(const Grid1D& g, double xi_lo, double xi_hi);

/// Every dual frequency of the grid, m = -n/2 .. n/2 - 1.
FrequencyGrid full_dual_frequency_grid(const Grid1D& g);

}  // namespace wptk
