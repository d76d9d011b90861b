#include "wptk/hamflow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "wptk/error.hpp"
#include "wptk/quadrature.hpp"

namespace wptk {
namespace {

// One RK4 step of x' = xi, xi' = -V'(s, x) with signed step h.
PhaseState rk4_step(const PotentialModel& v, double s, PhaseState y, double h) {
  const double k1x = y.xi;
  const double k1p = -v.gradient(s, y.x);
  const double k2x = y.xi + 0.5 * h * k1p;
  const double k2p = -v.gradient(s + 0.5 * h, y.x + 0.5 * h * k1x);
  const double k3x = y.xi + 0.5 * h * k2p;
  const double k3p = -v.gradient(s + 0.5 * h, y.x + 0.5 * h * k2x);
  const double k4x = y.xi + h * k3p;
  const double k4p = -v.gradient(s + h, y.x + h * k3x);
  return {y.x + h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x),
          y.xi + h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)};
}

void check_finite(const PhaseState& y, double s) {
  if (!std::isfinite(y.x) || !std::isfinite(y.xi)) {
    std::ostringstream os;
    os << "trajectory left the finite range near s = " << s;
    throw TrajectoryEscape(os.str());
  }
}

}  // namespace

FlowResult integrate_flow(const PotentialModel& v, double t, double x, double lambda, double xi,
                          int n_steps) {
  if (n_steps < 1) throw DomainError("integrate_flow: n_steps must be >= 1");
  FlowResult fr;
  fr.t = t;
  fr.x = x;
  fr.xi = lambda * xi;
  fr.steps = n_steps;
  const auto n = static_cast<std::size_t>(n_steps);
  fr.s.resize(n + 1);
  fr.x_path.resize(n + 1);
  fr.xi_path.resize(n + 1);
  for (std::size_t k = 0; k < n; ++k) fr.s[k] = t * static_cast<double>(k) / n_steps;
  fr.s[n] = t;

  if (t == 0.0 || v.kind() == PotentialModel::Kind::Zero) {
    for (std::size_t k = 0; k <= n; ++k) {
      fr.x_path[k] = k == n ? x : x + (fr.s[k] - t) * fr.xi;
      fr.xi_path[k] = fr.xi;
    }
    return fr;
  }

  // March in sigma = t - s, i.e. backwards in s.
  const double h = -t / n_steps;
  PhaseState y{x, fr.xi};
  fr.x_path[n] = y.x;
  fr.xi_path[n] = y.xi;
  for (std::size_t j = 0; j < n; ++j) {
    const double s = t - t * static_cast<double>(j) / n_steps;
    y = rk4_step(v, s, y, h);
    check_finite(y, s + h);
    fr.x_path[n - 1 - j] = y.x;
    fr.xi_path[n - 1 - j] = y.xi;
  }
  return fr;
}

PhaseState flow_between(const PotentialModel& v, double from, double to, double x, double xi,
                        int n_steps) {
  if (n_steps < 1) throw DomainError("flow_between: n_steps must be >= 1");
  if (from == to) return {x, xi};
  if (v.kind() == PotentialModel::Kind::Zero) return {x + (to - from) * xi, xi};
  const double h = (to - from) / n_steps;
  PhaseState y{x, xi};
  for (int j = 0; j < n_steps; ++j) {
    const double s = from + (to - from) * j / n_steps;
    y = rk4_step(v, s, y, h);
    check_finite(y, s + h);
  }
  return y;
}

PicardIterates picard_iterate(const PotentialModel& v, double t0, double x, double lambda,
                              double xi, int iterations, int n_quad) {
  if (iterations < 0) throw DomainError("picard_iterate: iterations must be >= 0");
  if (n_quad < 2) throw DomainError("picard_iterate: need at least two quadrature nodes");
  PicardIterates pi{t0, x, lambda, xi, {}, {}};
  const auto n = static_cast<std::size_t>(n_quad);
  pi.s.resize(n);
  for (std::size_t k = 0; k < n; ++k) pi.s[k] = t0 * static_cast<double>(k) / (n_quad - 1);
  pi.s[n - 1] = t0;

  std::vector<double> cur(n);
  for (std::size_t k = 0; k < n; ++k) cur[k] = x + (pi.s[k] - t0) * lambda * xi;
  pi.iterates.push_back(cur);

  std::vector<double> f(n);
  std::vector<double> sf(n);
  for (int it = 0; it < iterations; ++it) {
    for (std::size_t k = 0; k < n; ++k) {
      f[k] = v.gradient(pi.s[k], cur[k]);
      if (!std::isfinite(f[k])) throw TrajectoryEscape("picard_iterate: force is not finite");
      sf[k] = pi.s[k] * f[k];
    }
    const auto c1 = cumulative_trapezoid(pi.s, f);
    const auto c2 = cumulative_trapezoid(pi.s, sf);
    std::vector<double> next(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double i1 = c1[k] - c1[n - 1];
      const double i2 = c2[k] - c2[n - 1];
      next[k] = x + (pi.s[k] - t0) * lambda * xi - (pi.s[k] * i1 - i2);
    }
    cur = next;
    pi.iterates.push_back(std::move(next));
  }
  return pi;
}

BoundReport check_flow_bounds(const PotentialModel& v, double k_lo, double k_hi, double a,
                              double t0, const std::vector<double>& lambdas, double p,
                              const BoundOptions& opt) {
  if (!(a >= 1.0)) throw DomainError("check_flow_bounds: a must be >= 1");
  if (!(k_hi >= k_lo)) throw DomainError("check_flow_bounds: empty K");
  if (!(t0 > 0.0)) throw DomainError("check_flow_bounds: t0 must be positive");
  if (lambdas.empty()) throw DomainError("check_flow_bounds: empty lambda list");
  for (std::size_t i = 1; i < lambdas.size(); ++i) {
    if (!(lambdas[i] > lambdas[i - 1])) throw DomainError("check_flow_bounds: lambdas must ascend");
  }
  if (opt.x_samples < 1 || opt.xi_samples < 1 || opt.s_steps < 1) {
    throw DomainError("check_flow_bounds: sample counts must be positive");
  }

  BoundReport r;
  r.a = a;
  r.p = p;
  r.t0 = t0;
  r.outside_proved_regime = v.rho() < 1.0;
  {
    std::ostringstream os;
    os << opt.x_samples << " x-points in [" << k_lo << ", " << k_hi << "] x " << opt.xi_samples
       << " |xi|-points in [" << 1.0 / a << ", " << a << "] x 2 directions x " << opt.s_steps
       << " s-steps on [0, " << t0 << "]";
    r.sample_density = os.str();
  }

  const double lo_bound = 1.0 / (2.0 * a);
  const double hi_bound = 2.0 * a;
  bool any = false;
  for (double lambda : lambdas) {
    BoundRow row{lambda, std::numeric_limits<double>::infinity(), 0.0, 0, true};
    const double threshold = std::pow(lambda, p - 1.0);
    for (int ix = 0; ix < opt.x_samples; ++ix) {
      const double x =
          opt.x_samples == 1 ? 0.5 * (k_lo + k_hi) : k_lo + (k_hi - k_lo) * ix / (opt.x_samples - 1);
      for (int dir : {-1, 1}) {
        for (int j = 0; j < opt.xi_samples; ++j) {
          const double mag =
              opt.xi_samples == 1 ? 1.0 : std::pow(a, -1.0 + 2.0 * j / (opt.xi_samples - 1));
          const FlowResult fr = integrate_flow(v, t0, x, lambda, dir * mag, opt.s_steps);
          for (std::size_t k = 0; k < fr.s.size(); ++k) {
            const double tstar = std::abs(fr.s[k] - t0);
            if (tstar < threshold || tstar == 0.0) continue;
            const double ratio = std::abs(fr.x_path[k]) / (tstar * lambda);
            row.min_ratio = std::min(row.min_ratio, ratio);
            row.max_ratio = std::max(row.max_ratio, ratio);
            ++row.samples;
          }
        }
      }
    }
    if (row.samples == 0) {
      row.min_ratio = std::numeric_limits<double>::quiet_NaN();
      row.max_ratio = std::numeric_limits<double>::quiet_NaN();
    } else {
      any = true;
      row.pass = row.min_ratio >= lo_bound && row.max_ratio <= hi_bound;
    }
    r.rows.push_back(row);
  }
  if (!any) throw DomainError("check_flow_bounds: no admissible (s, lambda) samples");

  for (std::size_t i = r.rows.size(); i-- > 0;) {
    if (!r.rows[i].pass) break;
    r.lambda0 = r.rows[i].lambda;
  }
  return r;
}

double action_integral(const FlowResult& fr, const PotentialModel& v) {
  double a = 0.0;
  auto integrand = [&](std::size_t k) {
    return 0.5 * fr.xi_path[k] * fr.xi_path[k] + v.tilde(fr.s[k], fr.x_path[k]);
  };
  double prev = integrand(0);
  for (std::size_t k = 1; k < fr.s.size(); ++k) {
    const double cur = integrand(k);
    a += 0.5 * (fr.s[k] - fr.s[k - 1]) * (prev + cur);
    prev = cur;
  }
  return a;
}

RemainderReport straightline_remainder(const PotentialModel& v, double t, double x, double xi,
                                       const std::vector<double>& lambdas,
                                       int steps_per_unit_lambda) {
  if (lambdas.size() < 2) throw DomainError("straightline_remainder: need two or more lambdas");
  RemainderReport r;
  r.lambdas = lambdas;
  for (double lambda : lambdas) {
    const int steps = std::max(
        256, static_cast<int>(std::ceil(steps_per_unit_lambda * lambda * std::abs(t))));
    const FlowResult fr = integrate_flow(v, t, x, lambda, xi, steps);
    r.delta1.push_back(fr.x_at_zero() - (x - lambda * t * xi));
    r.delta2.push_back(fr.xi_at_zero() - lambda * xi);
  }

  auto fit = [&](const std::vector<double>& d) -> std::optional<double> {
    std::vector<double> lx;
    std::vector<double> ly;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] == 0.0) continue;
      lx.push_back(std::log(r.lambdas[i]));
      ly.push_back(std::log(std::abs(d[i])));
    }
    if (lx.size() < 2) return std::nullopt;
    return least_squares_slope(lx, ly);
  };
  r.slope1 = fit(r.delta1);
  r.slope2 = fit(r.delta2);
  r.exact_zero = !r.slope1 && !r.slope2;
  return r;
}

void write_trajectory_csv(std::ostream& os, const FlowResult& fr) {
  const auto old = os.precision(17);
  os << "s,x,xi\n";
  for (std::size_t k = 0; k < fr.s.size(); ++k) {
    os << fr.s[k] << ',' << fr.x_path[k] << ',' << fr.xi_path[k] << '\n';
  }
  os.precision(old);
}

void write_bound_csv(std::ostream& os, const BoundReport& r) {
  const auto old = os.precision(17);
  os << "lambda,min_ratio,max_ratio,pass\n";
  for (const auto& row : r.rows) {
    os << row.lambda << ',' << row.min_ratio << ',' << row.max_ratio << ','
       << (row.pass ? "true" : "false") << '\n';
  }
  os.precision(old);
}

}  // namespace wptk
