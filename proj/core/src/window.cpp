#include "wptk/window.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wptk/error.hpp"
#include "wptk/fft.hpp"

namespace wptk {

namespace {

double hermite_norm_constant(int n) {
  double fact = 1.0;
  for (int k = 2; k <= n; ++k) fact *= k;
  return 1.0 / std::sqrt(std::pow(2.0, n) * fact * std::sqrt(std::numbers::pi));
}

void check_lambda(double lambda) {
  if (!(lambda >= 1.0) || !std::isfinite(lambda)) {
    throw DomainError("window: lambda must be >= 1, got " + std::to_string(lambda));
  }
}

}  // namespace

double hermite_polynomial(int n, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

WindowFamily::WindowFamily(int order, double b) : order_(order), b_(b) {
  if (!(b > 0.0 && b < 1.0)) throw ConfigurationError("window: b must lie in (0, 1)");
  if (order < 0 || order > 16) throw ConfigurationError("window: hermite order must be in [0, 16]");
}

WindowFamily WindowFamily::gaussian(double b) { return WindowFamily(0, b); }
WindowFamily WindowFamily::hermite(int order, double b) { return WindowFamily(order, b); }

std::string WindowFamily::name() const {
  return order_ == 0 ? std::string("gaussian") : "hermite" + std::to_string(order_);
}

double WindowFamily::base_value(double x) const {
  return hermite_norm_constant(order_) * hermite_polynomial(order_, x) * std::exp(-0.5 * x * x);
}

AnalyticWindow::AnalyticWindow(int order, double scale, double amplitude, double tau)
    : order_(order),
      scale_(scale),
      amplitude_(amplitude),
      tau_(tau),
      q_inv_sqrt_(1.0),
      mu_pow_(1.0),
      inv_q_(1.0),
      hermite_scale_(1.0),
      norm_const_(hermite_norm_constant(order)) {
  if (tau != 0.0) {
    const cplx q(1.0, tau);
    q_inv_sqrt_ = 1.0 / std::sqrt(q);
    inv_q_ = 1.0 / q;
    mu_pow_ = std::polar(1.0, -order * std::atan(tau));
    hermite_scale_ = 1.0 / std::sqrt(1.0 + tau * tau);
  }
}

AnalyticWindow AnalyticWindow::scaled(const WindowFamily& w, double lambda) {
  check_lambda(lambda);
  const double k = std::pow(lambda, w.b());
  return AnalyticWindow(w.hermite_order(), k, std::pow(lambda, 0.5 * w.b()), 0.0);
}

AnalyticWindow AnalyticWindow::evolved(const WindowFamily& w, double lambda, double t) {
  check_lambda(lambda);
  if (t == 0.0) return scaled(w, lambda);
  const double k = std::pow(lambda, w.b());
  return AnalyticWindow(w.hermite_order(), k, std::pow(lambda, 0.5 * w.b()), k * k * t);
}

cplx AnalyticWindow::operator()(double x) const {
  const double z = scale_ * x;
  const double base = amplitude_ * norm_const_;
  if (tau_ == 0.0) {
    return base * hermite_polynomial(order_, z) * std::exp(-0.5 * z * z);
  }
  const cplx gauss = std::exp(-0.5 * z * z * inv_q_);
  return base * q_inv_sqrt_ * mu_pow_ * hermite_polynomial(order_, z * hermite_scale_) * gauss;
}

double AnalyticWindow::support_radius() const {
  // e^{-z^2/2} < 1e-42 here, even after the Hermite factor for order <= 16.
  const double z = 14.0 + 2.0 * std::sqrt(static_cast<double>(order_));
  return z * std::sqrt(1.0 + tau_ * tau_) / scale_;
}

cplx AnalyticWindow::gaussian_amplitude() const {
  if (order_ != 0) throw CapabilityError("window: gaussian parameters need hermite order 0");
  return amplitude_ * norm_const_ * q_inv_sqrt_;
}

cplx AnalyticWindow::gaussian_beta() const {
  if (order_ != 0) throw CapabilityError("window: gaussian parameters need hermite order 0");
  return scale_ * scale_ * inv_q_;
}

struct Window::Spectrum {
  Grid1D grid;
  std::vector<cplx> coefficients;  // forward DFT of the samples
  Fft fft;
};

Window::Window(AnalyticWindow w) : analytic_(w) {}

Window::Window(SampledField samples)
    : sampled_(std::make_shared<const SampledField>(std::move(samples))) {
  const auto& g = sampled_->grid();
  std::vector<cplx> coeffs(sampled_->samples().begin(), sampled_->samples().end());
  Fft fft(g.size());
  fft.forward(coeffs);
  spectrum_ = std::make_shared<const Spectrum>(Spectrum{g, std::move(coeffs), std::move(fft)});
}

double Window::norm() const { return analytic_ ? analytic_->norm() : sampled_->l2_norm(); }

void Window::shifted(const Grid1D& g, double shift, std::vector<cplx>& out, std::size_t* first,
                     std::size_t* last) const {
  const std::size_t n = g.size();
  out.assign(n, cplx{});
  if (analytic_) {
    const double r = analytic_->support_radius();
    const double lo = (shift - r - g.x_min()) / g.dx();
    const double hi = (shift + r - g.x_min()) / g.dx();
    const auto clamp = [n](double v) -> std::size_t {
      if (v <= 0.0) return 0;
      if (v >= static_cast<double>(n)) return n;
      return static_cast<std::size_t>(v);
    };
    *first = clamp(std::floor(lo));
    *last = clamp(std::ceil(hi) + 1.0);
    for (std::size_t k = *first; k < *last; ++k) out[k] = (*analytic_)(g.node(k) - shift);
    return;
  }
  if (!(spectrum_->grid == g)) throw ShapeError("window: sampled window lives on another grid");
  // phi(x_min + j dx - s) = (1/n) sum_m c_m e^{-i k_m s} e^{2 pi i j m / n}
  for (std::size_t m = 0; m < n; ++m) {
    out[m] = spectrum_->coefficients[m] * std::polar(1.0, -g.wavenumber(m) * shift);
  }
  spectrum_->fft.inverse(out);
  *first = 0;
  *last = n;
}

SampledField scaled_window(const WindowFamily& w, double lambda, const Grid1D& g) {
  return sample_window(AnalyticWindow::scaled(w, lambda), g);
}

SampledField sample_window(const AnalyticWindow& w, const Grid1D& g) {
  std::vector<cplx> v(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) v[k] = w(g.node(k));
  return SampledField(g, std::move(v));
}

}  // namespace wptk
