#pragma once

#include <optional>
#include <string>

#include "wptk/expression.hpp"
#include "wptk/jet.hpp"

namespace wptk {

/// Potential V(t, x) with the sub-quadratic data (rho, C) of the bound
///   |d^k V / dx^k| <= C (1 + |x|)^{rho - k}.
class PotentialModel {
 public:
  enum class Kind { Zero, Linear, Subquad, Expression };

  static PotentialModel zero();
  /// V = g x; rho = 1 and C = max(|g|, 1).
  static PotentialModel linear(double g);
  /// V = (1 + x^2)^{rho/2}. The default C = 8 covers derivative orders up to 4
  /// for every rho in [0, 2).
  static PotentialModel subquad(double rho, double bound_constant = 8.0);
  /// Custom V(t, x) from an expression string; derivatives come from Taylor
  /// jets up to `max_order`.
  static PotentialModel expression(const std::string& text, double rho, double bound_constant,
                                   int max_order = 4);

  Kind kind() const { return kind_; }
  double rho() const { return rho_; }
  double bound_constant() const { return c_; }
  /// Highest x-derivative order the model can evaluate.
  int max_order() const { return max_order_; }
  /// Slope g for the linear model, 0 for zero.
  double slope() const { return g_; }
  std::string name() const;

  /// True for zero and linear, where d^2 V / dx^2 vanishes identically.
  bool vanishing_second_derivative() const;
  bool time_dependent() const;

  double value(double t, double x) const;
  double gradient(double t, double x) const;
  double second(double t, double x) const;
  /// d^k V / dx^k; throws CapabilityError above max_order().
  double derivative(int k, double t, double x) const;
  /// V - x dV/dx.
  double tilde(double t, double x) const;

 private:
  PotentialModel(Kind kind, double rho, double c, int max_order);
  Jet jet(double t, double x, int order) const;

  Kind kind_;
  double rho_;
  double c_;
  int max_order_;
  double g_ = 0.0;
  std::optional<Expression> expr_;
};

/// Default scale exponent: min((2 - rho)/4, 1/4), or min(1/4, 1 - rho) in
/// corollary mode (which requires rho < 1).
double default_scale_exponent(double rho, bool corollary = false);

}  // namespace wptk
