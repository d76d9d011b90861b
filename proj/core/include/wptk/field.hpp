#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <vector>

#include "wptk/grid.hpp"

namespace wptk {

using cplx = std::complex<double>;

/// Complex samples of a function on a Grid1D, one value per node.
class SampledField {
 public:
  SampledField(Grid1D grid, std::vector<cplx> samples);
  explicit SampledField(Grid1D grid);  // zero field

  const Grid1D& grid() const { return grid_; }
  std::span<const cplx> samples() const { return samples_; }
  std::span<cplx> samples() { return samples_; }
  const cplx& operator[](std::size_t k) const { return samples_[k]; }
  cplx& operator[](std::size_t k) { return samples_[k]; }
  std::size_t size() const { return samples_.size(); }

  /// Trapezoid-rule L2 norm, sqrt(dx * sum |f_k|^2).
  double l2_norm() const;
  double max_abs() const;

  /// max |f| over the outer 5% of nodes (both ends) relative to max |f| overall.
  double boundary_ratio() const;
  /// True when boundary_ratio() <= 1e-8 (or the field vanishes).
  bool boundary_clean() const;

  SampledField& operator+=(const SampledField& other);
  SampledField& operator-=(const SampledField& other);
  SampledField& operator*=(cplx s);

 private:
  Grid1D grid_;
  std::vector<cplx> samples_;
};

SampledField operator+(SampledField a, const SampledField& b);
SampledField operator-(SampledField a, const SampledField& b);
SampledField operator*(cplx s, SampledField a);

inline constexpr double kBoundaryCleanTolerance = 1e-8;

/// Writes `x,re,im` with 17 significant digits.
void write_field_csv(std::ostream& os, const SampledField& f);
/// Inverse of write_field_csv; rebuilds the grid from the node column.
SampledField read_field_csv(std::istream& is);

}  // namespace wptk
