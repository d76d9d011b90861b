#include "wptk/jet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wptk/error.hpp"

namespace wptk {

namespace {

int joint_order(const Jet& a, const Jet& b) { return std::min(a.order(), b.order()); }

void sin_cos(const Jet& a, Jet* s, Jet* c) {
  const int n = a.order();
  *s = Jet(std::sin(a.value()), n);
  *c = Jet(std::cos(a.value()), n);
  for (int k = 1; k <= n; ++k) {
    double ss = 0.0;
    double cc = 0.0;
    for (int j = 1; j <= k; ++j) {
      ss += j * a.coefficient(j) * c->coefficient(k - j);
      cc += j * a.coefficient(j) * s->coefficient(k - j);
    }
    s->coefficient(k) = ss / k;
    c->coefficient(k) = -cc / k;
  }
}

Jet integer_power(const Jet& a, long long e) {
  Jet result(1.0, a.order());
  Jet base = a;
  unsigned long long m = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  while (m > 0) {
    if (m & 1ULL) result = result * base;
    m >>= 1ULL;
    if (m > 0) base = base * base;
  }
  if (e < 0) return Jet(1.0, a.order()) / result;
  return result;
}

}  // namespace

Jet::Jet(double value, int order) : order_(order) {
  if (order < 0 || order > kMaxOrder) throw CapabilityError("jet: order out of range");
  c_[0] = value;
}

Jet Jet::variable(double x0, int order) {
  Jet j(x0, order);
  if (order >= 1) j.c_[1] = 1.0;
  return j;
}

double Jet::derivative(int k) const {
  if (k > order_) throw CapabilityError("jet: derivative order exceeds jet order");
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f * c_[static_cast<std::size_t>(k)];
}

bool Jet::is_constant() const {
  for (int k = 1; k <= order_; ++k) {
    if (c_[static_cast<std::size_t>(k)] != 0.0) return false;
  }
  return true;
}

Jet& Jet::operator+=(const Jet& o) {
  order_ = std::min(order_, o.order_);
  for (int k = 0; k <= order_; ++k) c_[static_cast<std::size_t>(k)] += o.c_[static_cast<std::size_t>(k)];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  order_ = std::min(order_, o.order_);
  for (int k = 0; k <= order_; ++k) c_[static_cast<std::size_t>(k)] -= o.c_[static_cast<std::size_t>(k)];
  return *this;
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Jet operator*(const Jet& a, const Jet& b) {
  const int n = joint_order(a, b);
  Jet r(0.0, n);
  for (int k = 0; k <= n; ++k) {
    double s = 0.0;
    for (int j = 0; j <= k; ++j) s += a.coefficient(j) * b.coefficient(k - j);
    r.coefficient(k) = s;
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  const int n = joint_order(a, b);
  Jet r(0.0, n);
  const double b0 = b.value();
  for (int k = 0; k <= n; ++k) {
    double s = a.coefficient(k);
    for (int j = 1; j <= k; ++j) s -= b.coefficient(j) * r.coefficient(k - j);
    r.coefficient(k) = s / b0;
  }
  return r;
}

Jet exp(const Jet& a) {
  const int n = a.order();
  Jet r(std::exp(a.value()), n);
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * a.coefficient(j) * r.coefficient(k - j);
    r.coefficient(k) = s / k;
  }
  return r;
}

Jet log(const Jet& a) {
  const int n = a.order();
  const double a0 = a.value();
  Jet r(std::log(a0), n);
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int j = 1; j < k; ++j) s += j * r.coefficient(j) * a.coefficient(k - j);
    r.coefficient(k) = (a.coefficient(k) - s / k) / a0;
  }
  return r;
}

Jet sqrt(const Jet& a) { return pow(a, 0.5); }

Jet sin(const Jet& a) {
  Jet s;
  Jet c;
  sin_cos(a, &s, &c);
  return s;
}

Jet cos(const Jet& a) {
  Jet s;
  Jet c;
  sin_cos(a, &s, &c);
  return c;
}

Jet pow(const Jet& a, double r) {
  if (r == std::nearbyint(r) && std::abs(r) <= 64.0) {
    return integer_power(a, static_cast<long long>(r));
  }
  const int n = a.order();
  const double a0 = a.value();
  if (!(a0 > 0.0)) {
    if (a0 == 0.0 && n == 0 && r > 0.0) return Jet(0.0, 0);
    return Jet(std::numeric_limits<double>::quiet_NaN(), n);
  }
  Jet p(std::pow(a0, r), n);
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += ((r + 1.0) * j - k) * a.coefficient(j) * p.coefficient(k - j);
    p.coefficient(k) = s / (k * a0);
  }
  return p;
}

Jet pow(const Jet& a, const Jet& b) {
  if (b.is_constant()) return pow(a, b.value());
  return exp(b * log(a));
}

}  // namespace wptk
