#pragma once

#include <array>
#include <cstddef>

namespace wptk {

/// Truncated Taylor series in x about a point: f(x0 + h) = sum_k c[k] h^k for
/// k <= order. Arithmetic propagates exact derivatives up to kMaxOrder.
class Jet {
 public:
  static constexpr int kMaxOrder = 8;

  Jet() = default;
  Jet(double value, int order);

  static Jet constant(double v, int order) { return Jet(v, order); }
  /// The identity jet at x0: [x0, 1, 0, ...].
  static Jet variable(double x0, int order);

  int order() const { return order_; }
  double coefficient(int k) const { return c_[static_cast<std::size_t>(k)]; }
  double& coefficient(int k) { return c_[static_cast<std::size_t>(k)]; }
  double value() const { return c_[0]; }
  /// k-th derivative, k! c[k].
  double derivative(int k) const;
  /// True when every coefficient beyond the constant term vanishes.
  bool is_constant() const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet operator-() const;

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);

  friend Jet exp(const Jet& a);
  friend Jet log(const Jet& a);
  friend Jet sqrt(const Jet& a);
  friend Jet sin(const Jet& a);
  friend Jet cos(const Jet& a);
  /// a^r for real r; integer r works for any sign of a, otherwise a(x0) > 0.
  friend Jet pow(const Jet& a, double r);
  friend Jet pow(const Jet& a, const Jet& b);

 private:
  std::array<double, kMaxOrder + 1> c_{};
  int order_ = 0;
};

}  // namespace wptk
