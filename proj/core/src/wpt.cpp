#include "wptk/wpt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "wptk/error.hpp"
#include "wptk/fft.hpp"

namespace wptk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kReseed = 64;

std::string decay_warning(const SampledField& f) {
  return "decay-violation: signal is not boundary-clean (edge/peak ratio " +
         std::to_string(f.boundary_ratio()) + ")";
}

// dx * sum_{k in [first, last)} h_k e^{-i y_k xi}, phase advanced by rotation
// and reseeded exactly every kReseed nodes.
cplx modulated_sum(const Grid1D& g, std::span<const cplx> h, std::size_t first, std::size_t last,
                   double xi) {
  cplx acc{};
  const cplx step = std::polar(1.0, -xi * g.dx());
  cplx phase{};
  for (std::size_t k = first; k < last; ++k) {
    if ((k - first) % kReseed == 0) phase = std::polar(1.0, -xi * g.node(k));
    acc += h[k] * phase;
    phase *= step;
  }
  return acc * g.dx();
}

void check_dual_axis(const Grid1D& g, const FrequencyGrid& axis, long long* m0) {
  const double d_xi = kTwoPi / g.length();
  if (axis.count == 0 || axis.count > g.size() || std::abs(axis.step / d_xi - 1.0) > 1e-10) {
    throw ConfigurationError("wpt slice: xi axis spacing must equal 2 pi / L of the signal grid");
  }
  const double m = axis.start / d_xi;
  const double mr = std::round(m);
  if (std::abs(m - mr) > 1e-6) {
    throw ConfigurationError("wpt slice: xi axis must start on a dual-grid frequency");
  }
  const auto half = static_cast<long long>(g.size() / 2);
  *m0 = static_cast<long long>(mr);
  if (*m0 < -half || *m0 + static_cast<long long>(axis.count) - 1 > half - 1) {
    throw ConfigurationError("wpt slice: xi axis exceeds the dual grid");
  }
}

std::size_t bin_of(long long m, std::size_t n) {
  return static_cast<std::size_t>(m < 0 ? m + static_cast<long long>(n) : m);
}

}  // namespace

TransformResult wpt_direct(const Window& phi, const SampledField& f,
                           std::span<const PhasePoint> points) {
  const Grid1D& g = f.grid();
  if (phi.sampled() && !(phi.sampled()->grid() == g)) {
    throw ShapeError("wpt: window and signal live on different grids");
  }
  TransformResult result;
  result.values.resize(points.size());
  if (!f.boundary_clean()) result.warnings.push_back(decay_warning(f));

  std::vector<cplx> window;
  std::vector<cplx> h(g.size());
  std::size_t first = 0;
  std::size_t last = 0;
  bool have_shift = false;
  double cached_shift = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.xi)) throw DomainError("wpt: non-finite point");
    if (!have_shift || p.x != cached_shift) {
      phi.shifted(g, p.x, window, &first, &last);
      for (std::size_t k = first; k < last; ++k) h[k] = std::conj(window[k]) * f[k];
      cached_shift = p.x;
      have_shift = true;
    }
    result.values[i] = modulated_sum(g, h, first, last, p.xi);
  }
  return result;
}

WptSlice wpt_slice(const Window& phi, const SampledField& f, const UniformAxis& x_axis,
                   const FrequencyGrid& xi_axis) {
  const Grid1D& g = f.grid();
  if (phi.sampled() && !(phi.sampled()->grid() == g)) {
    throw ShapeError("wpt: window and signal live on different grids");
  }
  long long m0 = 0;
  check_dual_axis(g, xi_axis, &m0);

  WptSlice slice{g, x_axis, xi_axis, std::vector<cplx>(x_axis.count * xi_axis.count), {}};
  if (!f.boundary_clean()) slice.warnings.push_back(decay_warning(f));

  const std::size_t n = g.size();
  const Fft fft(n);
  std::vector<cplx> window;
  std::vector<cplx> h(n);
  std::vector<cplx> origin_phase(xi_axis.count);
  for (std::size_t j = 0; j < xi_axis.count; ++j) {
    origin_phase[j] = g.dx() * std::polar(1.0, -xi_axis.at(j) * g.x_min());
  }
  for (std::size_t ix = 0; ix < x_axis.count; ++ix) {
    std::size_t first = 0;
    std::size_t last = 0;
    phi.shifted(g, x_axis.at(ix), window, &first, &last);
    std::fill(h.begin(), h.end(), cplx{});
    for (std::size_t k = first; k < last; ++k) h[k] = std::conj(window[k]) * f[k];
    fft.forward(h);
    for (std::size_t j = 0; j < xi_axis.count; ++j) {
      const auto m = m0 + static_cast<long long>(j);
      slice.values[ix * xi_axis.count + j] = origin_phase[j] * h[bin_of(m, n)];
    }
  }
  return slice;
}

SampledField wpt_inverse(const WptSlice& slice, const Window& phi) {
  const Grid1D& g = slice.signal_grid;
  const std::size_t n = g.size();
  const std::size_t nx = slice.x_axis.count;
  const std::size_t nxi = slice.xi_axis.count;
  if (slice.values.size() != nx * nxi) throw ShapeError("wpt inverse: malformed slice");
  long long m0 = 0;
  check_dual_axis(g, slice.xi_axis, &m0);

  double peak = 0.0;
  for (const auto& v : slice.values) peak = std::max(peak, std::abs(v));
  SampledField out(g);
  if (peak == 0.0) return out;

  constexpr double kEdgeTolerance = 1e-9;
  if (nxi < n) {
    double edge = 0.0;
    for (std::size_t ix = 0; ix < nx; ++ix) {
      edge = std::max({edge, std::abs(slice.at(ix, 0)), std::abs(slice.at(ix, nxi - 1))});
    }
    if (edge > kEdgeTolerance * peak) {
      throw ResolutionError("wpt inverse: reconstruction-bandwidth error, |W| at the xi edges is " +
                            std::to_string(edge / peak) + " of its peak");
    }
  }
  {
    double edge = 0.0;
    for (std::size_t j = 0; j < nxi; ++j) {
      edge = std::max({edge, std::abs(slice.at(0, j)), std::abs(slice.at(nx - 1, j))});
    }
    if (edge > kEdgeTolerance * peak) {
      throw ResolutionError("wpt inverse: position axis cuts off the transform (edge ratio " +
                            std::to_string(edge / peak) + ")");
    }
  }

  const double norm = phi.norm();
  const double scale = slice.x_axis.step * slice.xi_axis.step * static_cast<double>(n) /
                       (kTwoPi * norm * norm);
  const Fft fft(n);
  std::vector<cplx> row(n);
  std::vector<cplx> window;
  std::vector<cplx> origin_phase(nxi);
  for (std::size_t j = 0; j < nxi; ++j) {
    origin_phase[j] = std::polar(1.0, slice.xi_axis.at(j) * g.x_min());
  }
  for (std::size_t ix = 0; ix < nx; ++ix) {
    std::fill(row.begin(), row.end(), cplx{});
    for (std::size_t j = 0; j < nxi; ++j) {
      row[bin_of(m0 + static_cast<long long>(j), n)] = slice.at(ix, j) * origin_phase[j];
    }
    fft.inverse(row);
    // phi(x - y) = phi(x_k - y): the window centred at y.
    std::size_t first = 0;
    std::size_t last = 0;
    phi.shifted(g, slice.x_axis.at(ix), window, &first, &last);
    for (std::size_t k = first; k < last; ++k) out[k] += scale * window[k] * row[k];
  }
  return out;
}

bool has_closed_form(const SignalDescriptor& signal, const AnalyticWindow& window) {
  if (std::holds_alternative<signal::Dirac>(signal)) return true;
  if (std::holds_alternative<signal::Gaussian>(signal) ||
      std::holds_alternative<signal::PlaneWave>(signal)) {
    return window.order() == 0;
  }
  return false;
}

cplx wpt_analytic_oracle(const SignalDescriptor& signal, const AnalyticWindow& window,
                         const PhasePoint& p) {
  if (const auto* d = std::get_if<signal::Dirac>(&signal)) {
    return std::conj(window(d->center - p.x)) * std::polar(1.0, -d->center * p.xi);
  }
  if (!has_closed_form(signal, window)) {
    throw UnsupportedError("wpt oracle: no closed form for " + describe(signal) +
                           " against a hermite order " + std::to_string(window.order()) +
                           " window");
  }
  validate(signal);
  // f(y) = a_f exp(-beta_f (y - c)^2 / 2 + i m y); window conj(phi(y - x)).
  cplx a_f = 1.0;
  double beta_f = 0.0;
  double c = 0.0;
  double m = 0.0;
  if (const auto* s = std::get_if<signal::Gaussian>(&signal)) {
    a_f = std::pow(std::numbers::pi * s->width * s->width, -0.25);
    beta_f = 1.0 / (s->width * s->width);
    c = s->center;
    m = s->momentum;
  } else {
    m = std::get<signal::PlaneWave>(signal).xi0;
  }
  const cplx a_w = std::conj(window.gaussian_amplitude());
  const cplx beta_w = std::conj(window.gaussian_beta());
  const cplx big_b = beta_w + beta_f;
  const cplx j = beta_w * p.x + beta_f * c + cplx(0.0, m - p.xi);
  const cplx c0 = 0.5 * (beta_w * p.x * p.x + beta_f * c * c);
  return a_w * a_f * std::sqrt(kTwoPi / big_b) * std::exp(j * j / (2.0 * big_b) - c0);
}

cplx wpt_analytic_oracle(const SignalDescriptor& signal, const WindowFamily& family, double lambda,
                         const PhasePoint& p) {
  return wpt_analytic_oracle(signal, AnalyticWindow::scaled(family, lambda), p);
}

void write_slice_csv(std::ostream& os, const WptSlice& slice, bool complex_values) {
  const auto old = os.precision(17);
  os << 'x';
  for (std::size_t j = 0; j < slice.xi_axis.count; ++j) {
    if (complex_values) {
      os << ",re(" << slice.xi_axis.at(j) << "),im(" << slice.xi_axis.at(j) << ')';
    } else {
      os << ',' << slice.xi_axis.at(j);
    }
  }
  os << '\n';
  for (std::size_t i = 0; i < slice.x_axis.count; ++i) {
    os << slice.x_axis.at(i);
    for (std::size_t j = 0; j < slice.xi_axis.count; ++j) {
      const cplx v = slice.at(i, j);
      if (complex_values) {
        os << ',' << v.real() << ',' << v.imag();
      } else {
        os << ',' << std::abs(v);
      }
    }
    os << '\n';
  }
  os.precision(old);
}

}  // namespace wptk
