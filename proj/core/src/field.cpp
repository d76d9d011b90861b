#include "wptk/field.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "wptk/error.hpp"

namespace wptk {

SampledField::SampledField(Grid1D grid, std::vector<cplx> samples)
    : grid_(grid), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size()) {
    throw ShapeError("field: sample count " + std::to_string(samples_.size()) +
                     " does not match grid size " + std::to_string(grid_.size()));
  }
}

SampledField::SampledField(Grid1D grid) : grid_(grid), samples_(grid.size(), cplx{}) {}

double SampledField::l2_norm() const {
  double acc = 0.0;
  for (const auto& v : samples_) acc += std::norm(v);
  return std::sqrt(acc * grid_.dx());
}

double SampledField::max_abs() const {
  double m = 0.0;
  for (const auto& v : samples_) m = std::max(m, std::abs(v));
  return m;
}

double SampledField::boundary_ratio() const {
  const double peak = max_abs();
  if (peak == 0.0) return 0.0;
  const std::size_t n = samples_.size();
  const std::size_t edge = std::max<std::size_t>(1, n / 20);
  double outer = 0.0;
  for (std::size_t k = 0; k < edge; ++k) {
    outer = std::max(outer, std::abs(samples_[k]));
    outer = std::max(outer, std::abs(samples_[n - 1 - k]));
  }
  return outer / peak;
}

bool SampledField::boundary_clean() const {
  return boundary_ratio() <= kBoundaryCleanTolerance;
}

SampledField& SampledField::operator+=(const SampledField& other) {
  if (!(grid_ == other.grid_)) throw ShapeError("field: grid mismatch in +=");
  for (std::size_t k = 0; k < samples_.size(); ++k) samples_[k] += other.samples_[k];
  return *this;
}

SampledField& SampledField::operator-=(const SampledField& other) {
  if (!(grid_ == other.grid_)) throw ShapeError("field: grid mismatch in -=");
  for (std::size_t k = 0; k < samples_.size(); ++k) samples_[k] -= other.samples_[k];
  return *this;
}

SampledField& SampledField::operator*=(cplx s) {
  for (auto& v : samples_) v *= s;
  return *this;
}

SampledField operator+(SampledField a, const SampledField& b) { return a += b; }
SampledField operator-(SampledField a, const SampledField& b) { return a -= b; }
SampledField operator*(cplx s, SampledField a) { return a *= s; }

void write_field_csv(std::ostream& os, const SampledField& f) {
  const auto old_precision = os.precision(17);
  os << "x,re,im\n";
  for (std::size_t k = 0; k < f.size(); ++k) {
    os << f.grid().node(k) << ',' << f[k].real() << ',' << f[k].imag() << '\n';
  }
  os.precision(old_precision);
}

SampledField read_field_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("x,re,im", 0) != 0) {
    throw ConfigurationError("field csv: missing `x,re,im` header");
  }
  std::vector<double> xs;
  std::vector<cplx> vals;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double x = 0, re = 0, im = 0;
    if (!(row >> x >> re >> im)) throw ConfigurationError("field csv: bad row: " + line);
    xs.push_back(x);
    vals.emplace_back(re, im);
  }
  if (xs.size() < 2) throw ConfigurationError("field csv: too few rows");
  const double dx = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
  Grid1D g(xs.front(), xs.front() + dx * static_cast<double>(xs.size()), xs.size());
  return SampledField(g, std::move(vals));
}

}  // namespace wptk
