#include "wptk/potential.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wptk/error.hpp"

namespace wptk {

PotentialModel::PotentialModel(Kind kind, double rho, double c, int max_order)
    : kind_(kind), rho_(rho), c_(c), max_order_(max_order) {}

PotentialModel PotentialModel::zero() { return PotentialModel(Kind::Zero, 0.0, 1.0, 1 << 20); }

PotentialModel PotentialModel::linear(double g) {
  if (!std::isfinite(g)) throw ConfigurationError("linear potential: slope must be finite");
  PotentialModel v(Kind::Linear, 1.0, std::max(std::abs(g), 1.0), 1 << 20);
  v.g_ = g;
  return v;
}

PotentialModel PotentialModel::subquad(double rho, double bound_constant) {
  if (!(rho >= 0.0 && rho < 2.0)) throw ConfigurationError("subquad potential: rho must lie in [0, 2)");
  if (!(bound_constant > 0.0)) throw ConfigurationError("subquad potential: C must be positive");
  return PotentialModel(Kind::Subquad, rho, bound_constant, Jet::kMaxOrder);
}

PotentialModel PotentialModel::expression(const std::string& text, double rho,
                                          double bound_constant, int max_order) {
  if (!(rho >= 0.0 && rho < 2.0)) throw ConfigurationError("expression potential: rho must lie in [0, 2)");
  if (!(bound_constant > 0.0)) throw ConfigurationError("expression potential: C must be positive");
  if (max_order < 2 || max_order > Jet::kMaxOrder) {
    throw ConfigurationError("expression potential: max_order must lie in [2, " +
                             std::to_string(Jet::kMaxOrder) + "]");
  }
  PotentialModel v(Kind::Expression, rho, bound_constant, max_order);
  v.expr_ = Expression::parse(text);
  return v;
}

std::string PotentialModel::name() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case Kind::Zero:
      return "zero";
    case Kind::Linear:
      os << "linear g=" << g_;
      return os.str();
    case Kind::Subquad:
      os << "subquad rho=" << rho_;
      return os.str();
    case Kind::Expression:
      os << "expression \"" << expr_->text() << "\" rho=" << rho_;
      return os.str();
  }
  return "unknown";
}

bool PotentialModel::vanishing_second_derivative() const {
  return kind_ == Kind::Zero || kind_ == Kind::Linear;
}

bool PotentialModel::time_dependent() const {
  return kind_ == Kind::Expression && expr_->depends_on_t();
}

Jet PotentialModel::jet(double t, double x, int order) const {
  switch (kind_) {
    case Kind::Subquad: {
      const Jet X = Jet::variable(x, order);
      return pow(Jet::constant(1.0, order) + X * X, 0.5 * rho_);
    }
    case Kind::Expression:
      return expr_->evaluate_jet(t, x, order);
    default:
      break;
  }
  Jet j(0.0, order);
  if (kind_ == Kind::Linear) {
    j.coefficient(0) = g_ * x;
    if (order >= 1) j.coefficient(1) = g_;
  }
  return j;
}

double PotentialModel::value(double t, double x) const {
  switch (kind_) {
    case Kind::Zero:
      return 0.0;
    case Kind::Linear:
      return g_ * x;
    case Kind::Subquad:
      return std::pow(1.0 + x * x, 0.5 * rho_);
    case Kind::Expression:
      return expr_->evaluate(t, x);
  }
  return 0.0;
}

double PotentialModel::gradient(double t, double x) const {
  switch (kind_) {
    case Kind::Zero:
      return 0.0;
    case Kind::Linear:
      return g_;
    case Kind::Subquad:
      return rho_ * x * std::pow(1.0 + x * x, 0.5 * rho_ - 1.0);
    case Kind::Expression:
      return expr_->evaluate_jet(t, x, 1).derivative(1);
  }
  return 0.0;
}

double PotentialModel::second(double t, double x) const {
  switch (kind_) {
    case Kind::Zero:
    case Kind::Linear:
      return 0.0;
    case Kind::Subquad: {
      const double s = 1.0 + x * x;
      return rho_ * std::pow(s, 0.5 * rho_ - 2.0) * (1.0 + (rho_ - 1.0) * x * x);
    }
    case Kind::Expression:
      return expr_->evaluate_jet(t, x, 2).derivative(2);
  }
  return 0.0;
}

double PotentialModel::derivative(int k, double t, double x) const {
  if (k < 0) throw DomainError("potential: negative derivative order");
  if (k > max_order_) {
    throw CapabilityError("potential " + name() + " exposes derivatives up to order " +
                          std::to_string(max_order_) + ", requested " + std::to_string(k));
  }
  switch (k) {
    case 0:
      return value(t, x);
    case 1:
      return gradient(t, x);
    case 2:
      return second(t, x);
    default:
      break;
  }
  if (vanishing_second_derivative()) return 0.0;
  return jet(t, x, k).derivative(k);
}

double PotentialModel::tilde(double t, double x) const {
  return value(t, x) - x * gradient(t, x);
}

double default_scale_exponent(double rho, bool corollary) {
  if (!(rho >= 0.0 && rho < 2.0)) throw DomainError("scale exponent: rho must lie in [0, 2)");
  if (corollary) {
    if (rho >= 1.0) throw DomainError("scale exponent: corollary mode needs rho < 1");
    return std::min(0.25, 1.0 - rho);
  }
  return std::min((2.0 - rho) / 4.0, 0.25);
}

}  // namespace wptk
