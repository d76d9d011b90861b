#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wptk/field.hpp"

namespace wptk {

/// Basic wave packet phi0 together with the scale exponent b that generates
/// phi_lambda(x) = lambda^{b/2} phi0(lambda^b x).
///
/// Bases are the L2-normalized Hermite functions
///   h_n(x) = (2^n n! sqrt(pi))^{-1/2} H_n(x) e^{-x^2/2},
/// with n = 0 being the default Gaussian pi^{-1/4} e^{-x^2/2}.
class WindowFamily {
 public:
  static WindowFamily gaussian(double b);
  static WindowFamily hermite(int order, double b);

  int hermite_order() const { return order_; }
  bool is_gaussian() const { return order_ == 0; }
  double b() const { return b_; }
  /// ||phi0||_{L2}; the bases are normalized so this is 1.
  double norm() const { return 1.0; }
  std::string name() const;

  /// phi0(x).
  double base_value(double x) const;

 private:
  WindowFamily(int order, double b);
  int order_;
  double b_;
};

/// Closed form of U0(t) phi_lambda for a Hermite-function base:
///   lambda^{b/2} N_n q^{-1/2} mu^n H_n(kx / sqrt(1 + tau^2)) e^{-(kx)^2 / (2q)}
/// with k = lambda^b, tau = k^2 t, q = 1 + i tau, mu = ((1 - i tau)/(1 + i tau))^{1/2}.
class AnalyticWindow {
 public:
  AnalyticWindow(int order, double scale, double amplitude, double tau);

  static AnalyticWindow scaled(const WindowFamily& w, double lambda);
  static AnalyticWindow evolved(const WindowFamily& w, double lambda, double t);

  cplx operator()(double x) const;
  int order() const { return order_; }
  double scale() const { return scale_; }
  double amplitude() const { return amplitude_; }
  double tau() const { return tau_; }
  double norm() const { return 1.0; }

  /// |x| beyond which |window| stays below 1e-42 of its peak; shifted() truncates there.
  double support_radius() const;

  /// For order 0: phi(x) = A exp(-beta x^2 / 2).
  cplx gaussian_amplitude() const;
  cplx gaussian_beta() const;

 private:
  int order_;
  double scale_;
  double amplitude_;
  double tau_;
  cplx q_inv_sqrt_;
  cplx mu_pow_;
  cplx inv_q_;
  double hermite_scale_;
  double norm_const_;
};

/// A window usable by the transform: either analytic (evaluated at any shift,
/// no periodic wrap) or sampled on the signal grid centred at the origin
/// (shifted by spectral interpolation on the periodic grid).
class Window {
 public:
  Window(AnalyticWindow w);  // NOLINT(google-explicit-constructor)
  Window(SampledField samples);  // NOLINT(google-explicit-constructor)

  bool is_analytic() const { return analytic_.has_value(); }
  const AnalyticWindow* analytic() const { return analytic_ ? &*analytic_ : nullptr; }
  const SampledField* sampled() const { return sampled_.get(); }

  /// L2 norm: exact for analytic windows, trapezoid for sampled ones.
  double norm() const;

  /// Writes phi(y_k - shift) into `out` for k in [*first, *last) and reports that
  /// range; nodes outside it hold zero. Sampled windows must live on `g`.
  void shifted(const Grid1D& g, double shift, std::vector<cplx>& out, std::size_t* first,
               std::size_t* last) const;

 private:
  struct Spectrum;
  std::optional<AnalyticWindow> analytic_;
  std::shared_ptr<const SampledField> sampled_;
  std::shared_ptr<const Spectrum> spectrum_;
};

/// Samples of phi_lambda on `g`; throws DomainError for lambda < 1.
SampledField scaled_window(const WindowFamily& w, double lambda, const Grid1D& g);

/// Evaluates an analytic window at every node (centred at the origin).
SampledField sample_window(const AnalyticWindow& w, const Grid1D& g);

/// Physicists' Hermite polynomial H_n(x).
double hermite_polynomial(int n, double x);

}  // namespace wptk
