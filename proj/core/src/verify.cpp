#include "wptk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "wptk/error.hpp"
#include "wptk/hamflow.hpp"
#include "wptk/quadrature.hpp"
#include "wptk/schrodinger.hpp"

namespace wptk {
namespace {

constexpr cplx kI{0.0, 1.0};

void compare(IdentityReport& r) {
  r.probes = r.lhs.size();
  for (std::size_t i = 0; i < r.lhs.size(); ++i) {
    r.max_abs_error = std::max(r.max_abs_error, std::abs(r.lhs[i] - r.rhs[i]));
    r.max_lhs = std::max(r.max_lhs, std::abs(r.lhs[i]));
  }
  r.max_rel_error = r.max_lhs > 0.0 ? r.max_abs_error / r.max_lhs : r.max_abs_error;
}

void append(std::vector<std::string>& into, const std::vector<std::string>& from) {
  for (const auto& w : from) {
    if (std::find(into.begin(), into.end(), w) == into.end()) into.push_back(w);
  }
}

}  // namespace

IdentityReport verify_free_identity(const SampledField& u0, const WindowFamily& w, double lambda,
                                    double t, const std::vector<PhasePoint>& probes, bool strict) {
  IdentityReport r;
  const Propagated ut = free_propagate(u0, t);
  append(r.warnings, ut.warnings);

  const TransformResult lhs = wpt_direct(Window(AnalyticWindow::evolved(w, lambda, t)), ut.field, probes);
  std::vector<PhasePoint> shifted;
  shifted.reserve(probes.size());
  for (const auto& p : probes) shifted.push_back({p.x - p.xi * t, p.xi});
  const TransformResult rhs = wpt_direct(Window(AnalyticWindow::scaled(w, lambda)), u0, shifted);
  append(r.warnings, lhs.warnings);
  append(r.warnings, rhs.warnings);

  r.lhs = lhs.values;
  r.rhs.resize(probes.size());
  for (std::size_t i = 0; i < probes.size(); ++i) {
    r.rhs[i] = std::polar(1.0, -0.5 * t * probes[i].xi * probes[i].xi) * rhs.values[i];
  }
  compare(r);
  r.strict_failure = strict && !r.warnings.empty();
  return r;
}

cplx ru_quadrature(const SampledField& u_t, const PotentialModel& v, const WindowFamily& w,
                   double lambda, double t, const PhasePoint& p, int theta_nodes) {
  if (v.max_order() < 2) {
    throw CapabilityError("ru_quadrature: potential " + v.name() + " has no second derivative");
  }
  if (v.vanishing_second_derivative()) return {};
  const Grid1D& g = u_t.grid();
  const AnalyticWindow phi = AnalyticWindow::evolved(w, lambda, t);
  const QuadratureRule rule = gauss_legendre(theta_nodes, 0.0, 1.0);

  std::vector<cplx> window;
  std::size_t first = 0;
  std::size_t last = 0;
  Window(phi).shifted(g, p.x, window, &first, &last);

  cplx acc{};
  for (std::size_t k = first; k < last; ++k) {
    const double y = g.node(k);
    const double d = y - p.x;
    const cplx weight = std::conj(window[k]) * u_t[k];
    if (weight == cplx{}) continue;
    double m = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double th = rule.nodes[q];
      m += rule.weights[q] * v.second(t, p.x + th * d) * (1.0 - th);
    }
    acc += weight * (m * d * d) * std::polar(1.0, -p.xi * y);
  }
  return acc * g.dx();
}

ResidualReport pde_residual(const SampledField& u0, const PotentialModel& v,
                            const WindowFamily& w, double lambda, double t, double h,
                            const ResidualOptions& opt) {
  if (!(h > 0.0)) throw DomainError("pde_residual: h must be positive");
  if (opt.nx < 1 || opt.nxi < 1) throw DomainError("pde_residual: empty probe grid");
  if (!(opt.split_fraction > 0.0)) throw DomainError("pde_residual: split_fraction must be positive");

  const Grid1D& g = u0.grid();
  const double kappa = std::pow(lambda, w.b());
  const double band = std::max(std::abs(opt.xi_lo), std::abs(opt.xi_hi)) + h +
                      (6.0 + std::sqrt(2.0 * w.hermite_order())) * kappa;
  if (band > std::numbers::pi / g.dx()) {
    std::ostringstream os;
    os << "pde_residual: probed band " << band << " exceeds the Nyquist frequency "
       << std::numbers::pi / g.dx();
    throw ResolutionError(os.str());
  }

  if (opt.stencil_order != 2 && opt.stencil_order != 4) {
    throw ConfigurationError("pde_residual: stencil_order must be 2 or 4");
  }
  const int reach = opt.stencil_order / 2;

  ResidualReport r;
  r.h = h;
  r.split_dt = opt.split_fraction * h;
  const int sub = std::max(1, static_cast<int>(std::lround(h / r.split_dt)));
  r.split_dt = h / sub;

  // u at t + j h for j = -reach..reach, one split-step chain.
  std::vector<SampledField> u;
  {
    const double t_first = t - reach * h;
    const int n_first = std::max(1, static_cast<int>(std::lround(std::abs(t_first) / r.split_dt)));
    Propagated p = split_step_evolve(u0, v, 0.0, t_first, n_first);
    append(r.warnings, p.warnings);
    u.push_back(p.field);
    for (int j = -reach + 1; j <= reach; ++j) {
      p = split_step_evolve(u.back(), v, t + (j - 1) * h, t + j * h, sub);
      append(r.warnings, p.warnings);
      u.push_back(p.field);
    }
  }
  const SampledField& uc = u[static_cast<std::size_t>(reach)];

  std::vector<PhasePoint> probes;
  for (int i = 0; i < opt.nx; ++i) {
    const double x = opt.nx == 1 ? opt.x_lo : opt.x_lo + (opt.x_hi - opt.x_lo) * i / (opt.nx - 1);
    for (int j = 0; j < opt.nxi; ++j) {
      const double xi =
          opt.nxi == 1 ? opt.xi_lo : opt.xi_lo + (opt.xi_hi - opt.xi_lo) * j / (opt.nxi - 1);
      probes.push_back({x, xi});
    }
  }

  // Offsets j h with their weights for d/dz, centred.
  std::vector<std::pair<int, double>> stencil;
  if (opt.stencil_order == 2) {
    stencil = {{1, 0.5}, {-1, -0.5}};
  } else {
    stencil = {{1, 2.0 / 3.0}, {-1, -2.0 / 3.0}, {2, -1.0 / 12.0}, {-2, 1.0 / 12.0}};
  }

  // Centre-time points: the probe, then x offsets, then xi offsets.
  const std::size_t per = 1 + 2 * stencil.size();
  std::vector<PhasePoint> centre_pts;
  for (const auto& p : probes) {
    centre_pts.push_back(p);
    for (const auto& [j, wgt] : stencil) centre_pts.push_back({p.x + j * h, p.xi});
    for (const auto& [j, wgt] : stencil) centre_pts.push_back({p.x, p.xi + j * h});
  }
  const TransformResult wc =
      wpt_direct(Window(AnalyticWindow::evolved(w, lambda, t)), uc, centre_pts);
  append(r.warnings, wc.warnings);
  std::vector<std::vector<cplx>> wt(u.size());
  for (int j = -reach; j <= reach; ++j) {
    if (j == 0) continue;
    const auto idx = static_cast<std::size_t>(j + reach);
    wt[idx] = wpt_direct(Window(AnalyticWindow::evolved(w, lambda, t + j * h)), u[idx], probes).values;
  }

  double sum2 = 0.0;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const auto& p = probes[i];
    const cplx* c = &wc.values[per * i];
    cplx dt{};
    cplx dx{};
    cplx dxi{};
    for (std::size_t s = 0; s < stencil.size(); ++s) {
      const auto [j, wgt] = stencil[s];
      dt += wgt * wt[static_cast<std::size_t>(j + reach)][i];
      dx += wgt * c[1 + s];
      dxi += wgt * c[1 + stencil.size() + s];
    }
    dt /= h;
    dx /= h;
    dxi /= h;
    const cplx ru = ru_quadrature(uc, v, w, lambda, t, p);
    const cplx res = kI * dt + kI * p.xi * dx - kI * v.gradient(t, p.x) * dxi -
                     (0.5 * p.xi * p.xi + v.tilde(t, p.x)) * c[0] - ru;
    r.sup_norm = std::max(r.sup_norm, std::abs(res));
    r.max_ru = std::max(r.max_ru, std::abs(ru));
    sum2 += std::norm(res);
  }
  r.l2_norm = std::sqrt(sum2 / static_cast<double>(probes.size()));
  return r;
}

FlowIdentityReport verify_flow_identity(const SampledField& u0, const PotentialModel& v,
                                        const WindowFamily& w, double lambda, double t0,
                                        const std::vector<PhasePoint>& probes,
                                        FlowIdentityMode mode, const FlowIdentityOptions& opt) {
  if (mode == FlowIdentityMode::Exact && !v.vanishing_second_derivative()) {
    throw ModeError("verify_flow_identity: exact mode needs a potential with V'' = 0, got " +
                    v.name() + "; use bound mode");
  }
  FlowIdentityReport out;
  out.mode = mode;
  IdentityReport& r = out.comparison;

  const Propagated ut = split_step_evolve(u0, v, t0, opt.split_steps);
  append(r.warnings, ut.warnings);

  std::vector<PhasePoint> lhs_pts;
  std::vector<PhasePoint> rhs_pts;
  std::vector<double> actions;
  for (const auto& p : probes) {
    lhs_pts.push_back({p.x, lambda * p.xi});
    const FlowResult fr = integrate_flow(v, t0, p.x, lambda, p.xi, opt.flow_steps);
    rhs_pts.push_back({fr.x_at_zero(), fr.xi_at_zero()});
    actions.push_back(action_integral(fr, v));
  }
  const TransformResult lhs = wpt_direct(Window(AnalyticWindow::scaled(w, lambda)), ut.field, lhs_pts);
  const TransformResult rhs =
      wpt_direct(Window(AnalyticWindow::evolved(w, lambda, -t0)), u0, rhs_pts);
  append(r.warnings, lhs.warnings);
  append(r.warnings, rhs.warnings);

  r.lhs = lhs.values;
  r.rhs.resize(probes.size());
  for (std::size_t i = 0; i < probes.size(); ++i) {
    r.rhs[i] = std::polar(1.0, -actions[i]) * rhs.values[i];
  }
  compare(r);

  if (mode == FlowIdentityMode::Bound) {
    for (const auto& p : lhs_pts) {
      out.ru_scale = std::max(out.ru_scale, std::abs(t0) * std::abs(ru_quadrature(ut.field, v, w, lambda, t0, p)));
    }
  }
  return out;
}

std::size_t RoundtripReport::disagreements() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const RoundtripRow& r) { return r.disagree; }));
}

RoundtripReport theorem_roundtrip(const SignalDescriptor& u0, const PotentialModel& v,
                                  const WindowFamily& w, double t,
                                  const std::vector<double>& lambdas, const Thresholds& th,
                                  const RoundtripOptions& opt) {
  RoundtripReport r;
  r.signal = describe(u0);
  r.potential = v.name();
  r.t = t;

  const Grid1D& g = opt.grid;
  SampledField start(g);
  if (const auto* d = std::get_if<signal::Dirac>(&u0)) {
    const double width = opt.mollifier_factor * g.dx();
    start = sample_mollified_dirac(d->center, width, g);
    r.mollifier_width = width;
  } else {
    start = sample_signal(u0, g);
  }
  SampledField ut = start;
  if (t != 0.0) {
    Propagated p = split_step_evolve(start, v, t, opt.split_steps);
    append(r.warnings, p.warnings);
    ut = std::move(p.field);
  }

  ProbeOptions flowed_opt = opt.probe;
  flowed_opt.sampling_grid = g;
  const ProbeSignal static_signal = ut;
  const ProbeSignal flowed_signal = u0;
  const std::vector<WindowFamily> windows{w};

  const auto statics = detect_wavefront_grid(static_signal, windows, opt.region, lambdas, th, opt.probe);
  for (const auto& c : statics) append(r.warnings, c.report.warnings);

  const double half_width = candidate_half_width(opt.region);
  for (const auto& s : statics) {
    const ConicNeighborhood nb = neighborhood_around(s.x0, s.direction, half_width, opt.region.a,
                                                     opt.region.x_samples, opt.region.xi_samples);
    DecayReport fr = flowed_decay_probe(flowed_signal, v, windows, t, nb, lambdas, flowed_opt);
    append(r.warnings, fr.warnings);
    const Classification fc = classify(fr, th);
    const bool disagree = s.classification.verdict != Verdict::Inconclusive &&
                          fc.verdict != Verdict::Inconclusive &&
                          s.classification.verdict != fc.verdict;
    r.rows.push_back({s.x0, s.direction, s.classification, fc, disagree});
  }
  return r;
}

void write_summary(std::ostream& os, const std::vector<CheckLine>& lines) {
  const auto old = os.precision(6);
  for (const auto& l : lines) {
    os << l.name << ' ' << l.metric << ' ' << std::scientific << l.value << std::defaultfloat
       << ' ' << (l.pass ? "PASS" : "FAIL") << '\n';
  }
  os.precision(old);
}

void write_identity_csv(std::ostream& os, const std::vector<PhasePoint>& probes,
                        const IdentityReport& r) {
  const auto old = os.precision(17);
  os << "x,xi,lhs_re,lhs_im,rhs_re,rhs_im,abs_err\n";
  for (std::size_t i = 0; i < probes.size() && i < r.lhs.size(); ++i) {
    os << probes[i].x << ',' << probes[i].xi << ',' << r.lhs[i].real() << ',' << r.lhs[i].imag()
       << ',' << r.rhs[i].real() << ',' << r.rhs[i].imag() << ',' << std::abs(r.lhs[i] - r.rhs[i])
       << '\n';
  }
  os.precision(old);
}

void write_roundtrip_csv(std::ostream& os, const RoundtripReport& r) {
  const auto old = os.precision(17);
  os << "x0,dir,static_slope,static_verdict,flowed_slope,flowed_verdict,disagree\n";
  for (const auto& row : r.rows) {
    os << row.x0 << ',' << row.direction << ',' << row.static_side.slope << ','
       << to_string(row.static_side.verdict) << ',' << row.flowed_side.slope << ','
       << to_string(row.flowed_side.verdict) << ',' << (row.disagree ? "true" : "false") << '\n';
  }
  os.precision(old);
}

}  // namespace wptk
