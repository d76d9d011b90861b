#include "wptk/signal.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "wptk/error.hpp"

namespace wptk {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_inside(double point, const Grid1D& g, const char* what) {
  if (!(point > g.x_min() && point < g.x_max())) {
    throw DomainError(std::string(what) + ": singular point must lie strictly inside the grid");
  }
}

}  // namespace

void validate(const SignalDescriptor& d) {
  std::visit(overloaded{
                 [](const signal::Gaussian& s) {
                   if (!(s.width > 0.0)) throw ConfigurationError("gaussian: width must be > 0");
                 },
                 [](const signal::Cusp& s) {
                   if (!(s.alpha > 0.0 && s.alpha < 2.0)) {
                     throw ConfigurationError("cusp: exponent must lie in (0, 2)");
                   }
                 },
                 [](const auto&) {},
             },
             d);
}

std::string describe(const SignalDescriptor& d) {
  std::ostringstream os;
  os.precision(17);
  std::visit(overloaded{
                 [&](const signal::Gaussian& s) {
                   os << "gaussian(center=" << s.center << ", width=" << s.width
                      << ", momentum=" << s.momentum << ")";
                 },
                 [&](const signal::PlaneWave& s) { os << "plane_wave(xi0=" << s.xi0 << ")"; },
                 [&](const signal::Heaviside& s) { os << "heaviside(jump=" << s.jump << ")"; },
                 [&](const signal::Cusp& s) {
                   os << "cusp(center=" << s.center << ", alpha=" << s.alpha << ", xi0=" << s.xi0
                      << ")";
                 },
                 [&](const signal::Dirac& s) { os << "dirac(center=" << s.center << ")"; },
             },
             d);
  return os.str();
}

cplx evaluate(const SignalDescriptor& d, double x) {
  return std::visit(
      overloaded{
          [x](const signal::Gaussian& s) -> cplx {
            const double z = (x - s.center) / s.width;
            const double amp = std::pow(std::numbers::pi * s.width * s.width, -0.25);
            return amp * std::exp(-0.5 * z * z) * std::polar(1.0, s.momentum * x);
          },
          [x](const signal::PlaneWave& s) -> cplx { return std::polar(1.0, s.xi0 * x); },
          [x](const signal::Heaviside& s) -> cplx { return x >= s.jump ? 1.0 : 0.0; },
          [x](const signal::Cusp& s) -> cplx {
            const double r = x - s.center;
            return std::pow(std::abs(r), s.alpha) * std::exp(-0.5 * r * r) *
                   std::polar(1.0, s.xi0 * x);
          },
          [](const signal::Dirac&) -> cplx {
            throw UnsupportedError("dirac: point masses cannot be sampled");
          },
      },
      d);
}

SampledField sample_signal(const SignalDescriptor& d, const Grid1D& g) {
  validate(d);
  if (std::holds_alternative<signal::Dirac>(d)) {
    throw UnsupportedError("dirac: point masses cannot be sampled; use the analytic oracle");
  }
  if (const auto* h = std::get_if<signal::Heaviside>(&d)) require_inside(h->jump, g, "heaviside");
  if (const auto* c = std::get_if<signal::Cusp>(&d)) require_inside(c->center, g, "cusp");
  std::vector<cplx> v(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) v[k] = evaluate(d, g.node(k));
  return SampledField(g, std::move(v));
}

SampledField sample_mollified_dirac(double center, double width, const Grid1D& g) {
  if (!(width > 0.0)) throw ConfigurationError("mollified dirac: width must be > 0");
  const double amp = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * width);
  std::vector<cplx> v(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double z = (g.node(k) - center) / width;
    v[k] = amp * std::exp(-0.5 * z * z);
  }
  return SampledField(g, std::move(v));
}

}  // namespace wptk
