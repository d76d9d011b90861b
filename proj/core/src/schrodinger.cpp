#include "wptk/schrodinger.hpp"

#include <cmath>
#include <sstream>

#include "wptk/error.hpp"
#include "wptk/fft.hpp"

namespace wptk {
namespace {

void check_boundary(const SampledField& f, const char* stage, std::vector<std::string>& warnings) {
  if (f.boundary_clean()) return;
  std::ostringstream os;
  os << "decay violation: boundary ratio " << f.boundary_ratio() << " " << stage;
  warnings.push_back(os.str());
}

std::vector<cplx> kinetic_multiplier(const Grid1D& g, double t) {
  std::vector<cplx> m(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double k = g.wavenumber(j);
    m[j] = std::polar(1.0, -0.5 * t * k * k);
  }
  return m;
}

void multiply(std::span<cplx> u, const std::vector<cplx>& m) {
  for (std::size_t j = 0; j < u.size(); ++j) u[j] *= m[j];
}

}  // namespace

Propagated free_propagate(const SampledField& f, double t) {
  Propagated out{f, {}};
  check_boundary(f, "before free propagation", out.warnings);
  if (t == 0.0) return out;
  const Fft fft(f.size());
  auto u = out.field.samples();
  fft.forward(u);
  multiply(u, kinetic_multiplier(f.grid(), t));
  fft.inverse(u);
  check_boundary(out.field, "after free propagation", out.warnings);
  return out;
}

EvolvedWindow evolved_window(const WindowFamily& w, double lambda, double t) {
  return EvolvedWindow{w, lambda, t, AnalyticWindow::evolved(w, lambda, t)};
}

Propagated evolved_window_sampled(const WindowFamily& w, double lambda, double t,
                                  const Grid1D& g) {
  return free_propagate(scaled_window(w, lambda, g), t);
}

Propagated split_step_evolve(const SampledField& u0, const PotentialModel& v, double t_start,
                             double t_end, int n_steps) {
  if (n_steps < 1) throw DomainError("split_step_evolve: n_steps must be >= 1");
  Propagated out{u0, {}};
  check_boundary(u0, "in split-step initial data", out.warnings);
  if (t_end == t_start) return out;

  const Grid1D& g = u0.grid();
  const double dt = (t_end - t_start) / n_steps;
  const auto half = kinetic_multiplier(g, 0.5 * dt);
  const auto full = kinetic_multiplier(g, dt);
  const Fft fft(g.size());
  auto u = out.field.samples();

  std::vector<cplx> phase(g.size());
  auto fill_phase = [&](double s) {
    for (std::size_t k = 0; k < g.size(); ++k) {
      const double vk = v.value(s, g.node(k));
      if (!std::isfinite(vk)) throw DomainError("split_step_evolve: potential is not finite");
      phase[k] = std::polar(1.0, -vk * dt);
    }
  };
  const bool frozen = !v.time_dependent();
  if (frozen) fill_phase(t_start);

  fft.forward(u);
  multiply(u, half);
  for (int step = 0; step < n_steps; ++step) {
    fft.inverse(u);
    if (!frozen) fill_phase(t_start + (step + 0.5) * dt);
    multiply(u, phase);
    fft.forward(u);
    multiply(u, step + 1 == n_steps ? half : full);
  }
  fft.inverse(u);
  check_boundary(out.field, "after split-step evolution", out.warnings);
  return out;
}

bool AssumptionReport::pass() const {
  for (const auto& o : orders) {
    if (!o.pass) return false;
  }
  return true;
}

AssumptionReport validate_assumption(const PotentialModel& v, double x_lo, double x_hi,
                                     double t_lo, double t_hi, int max_order, int x_samples,
                                     int t_samples) {
  if (max_order < 0) throw DomainError("validate_assumption: negative order");
  if (max_order > v.max_order()) {
    throw CapabilityError("validate_assumption: potential " + v.name() +
                          " exposes derivatives only up to order " +
                          std::to_string(v.max_order()));
  }
  if (!(x_hi > x_lo) || t_hi < t_lo || x_samples < 2 || t_samples < 1) {
    throw DomainError("validate_assumption: empty sample box");
  }
  if (!v.time_dependent()) t_samples = 1;

  AssumptionReport r{v.name(), v.rho(), v.bound_constant(), x_lo, x_hi, t_lo, t_hi,
                     x_samples, t_samples, {}};
  for (int k = 0; k <= max_order; ++k) {
    AssumptionOrder o{k, 0.0, x_lo, t_lo, true};
    for (int it = 0; it < t_samples; ++it) {
      const double t = t_samples == 1 ? t_lo : t_lo + (t_hi - t_lo) * it / (t_samples - 1);
      for (int ix = 0; ix < x_samples; ++ix) {
        const double x = x_lo + (x_hi - x_lo) * ix / (x_samples - 1);
        const double ratio =
            std::abs(v.derivative(k, t, x)) / std::pow(1.0 + std::abs(x), v.rho() - k);
        if (std::isnan(ratio) || ratio > o.sup_ratio) {
          o.sup_ratio = ratio;
          o.argmax_x = x;
          o.argmax_t = t;
        }
      }
    }
    o.pass = o.sup_ratio <= v.bound_constant();
    r.orders.push_back(o);
  }
  return r;
}

}  // namespace wptk
