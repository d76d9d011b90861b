#include "wptk/wavefront.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "wptk/error.hpp"
#include "wptk/hamflow.hpp"
#include "wptk/quadrature.hpp"

namespace wptk {

void ConicNeighborhood::validate() const {
  if (!(k_hi >= k_lo) || !std::isfinite(k_lo) || !std::isfinite(k_hi)) {
    throw ConfigurationError("neighborhood: K must be a nonempty finite interval");
  }
  if (!(a >= 1.0)) throw ConfigurationError("neighborhood: a must be >= 1");
  if (x_samples < 3 || xi_samples < 3) {
    throw ConfigurationError("neighborhood: sample counts must be >= 3");
  }
  if (directions.empty()) throw ConfigurationError("neighborhood: no directions");
  for (int d : directions) {
    if (d != 1 && d != -1) throw ConfigurationError("neighborhood: directions must be +1 or -1");
  }
}

std::vector<PhasePoint> ConicNeighborhood::samples() const {
  validate();
  std::vector<PhasePoint> pts;
  for (int i = 0; i < x_samples; ++i) {
    const double x = k_lo + (k_hi - k_lo) * i / (x_samples - 1);
    for (int d : directions) {
      for (int j = 0; j < xi_samples; ++j) {
        const double mag = std::pow(a, -1.0 + 2.0 * j / (xi_samples - 1));
        pts.push_back({x, d * mag});
      }
    }
  }
  return pts;
}

ConicNeighborhood neighborhood_around(double x0, int direction, double half_width, double a,
                                      int x_samples, int xi_samples) {
  ConicNeighborhood nb{x0 - half_width, x0 + half_width, {direction}, a, x_samples, xi_samples};
  nb.validate();
  return nb;
}

SlopeFit fit_decay_slope(const std::vector<double>& lambdas, const std::vector<double>& magnitudes,
                         double floor) {
  if (lambdas.size() != magnitudes.size()) throw ShapeError("fit_decay_slope: size mismatch");
  if (lambdas.size() < 2) throw DomainError("fit_decay_slope: need at least two lambdas");
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = lambdas.size() / 2; i < lambdas.size(); ++i) {
    if (!(lambdas[i] > 0.0)) throw DomainError("fit_decay_slope: lambdas must be positive");
    if (magnitudes[i] < 0.0 || std::isnan(magnitudes[i])) {
      throw DomainError("fit_decay_slope: magnitudes must be nonnegative");
    }
    if (magnitudes[i] <= floor) continue;
    lx.push_back(std::log(lambdas[i]));
    ly.push_back(std::log(magnitudes[i]));
  }
  if (lx.size() < 3) return {-std::numeric_limits<double>::infinity(), true};
  return {least_squares_slope(lx, ly), false};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Regular:
      return "Regular";
    case Verdict::InWavefront:
      return "InWavefront";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

Classification classify(const SlopeFit& fit, const Thresholds& th) {
  if (!(th.regular < th.wavefront)) {
    throw ConfigurationError("classify: the regular threshold must lie below the wavefront one");
  }
  Classification c;
  c.slope = fit.slope;
  c.numerically_zero = fit.numerically_zero;
  c.thresholds = th;
  if (fit.numerically_zero || fit.slope <= th.regular) {
    c.verdict = Verdict::Regular;
  } else if (fit.slope >= th.wavefront) {
    c.verdict = Verdict::InWavefront;
  } else {
    c.verdict = Verdict::Inconclusive;
  }
  return c;
}

Classification classify(const DecayReport& report, const Thresholds& th) {
  return classify(report.per_window.front().fit, th);
}

double max_admissible_lambda(const Grid1D& g, double b, double max_abs_xi) {
  const double dx = g.dx();
  const double band = std::numbers::pi / (2.0 * dx);
  auto ok = [&](double lambda) {
    const double k = std::pow(lambda, b);
    return 1.0 / k >= 4.0 * dx && lambda * max_abs_xi + 6.0 * k <= band;
  };
  if (!ok(1.0)) return 0.0;
  double lo = 1.0;
  double hi = 2.0;
  while (ok(hi) && hi < 1e300) {
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 200 && hi / lo > 1.0 + 1e-12; ++i) {
    const double mid = std::sqrt(lo * hi);
    (ok(mid) ? lo : hi) = mid;
  }
  return lo;
}

namespace {

void validate_lambdas(const std::vector<double>& lambdas) {
  if (lambdas.size() < 6) throw ConfigurationError("decay probe: need at least 6 lambdas");
  if (!(lambdas.front() >= 1.0)) throw ConfigurationError("decay probe: lambdas must be >= 1");
  const double ratio = lambdas[1] / lambdas[0];
  if (!(ratio > 1.0)) throw ConfigurationError("decay probe: lambdas must ascend");
  for (std::size_t i = 1; i < lambdas.size(); ++i) {
    const double r = lambdas[i] / lambdas[i - 1];
    if (std::abs(r / ratio - 1.0) > 1e-9) {
      throw ConfigurationError("decay probe: lambdas must form a geometric sequence");
    }
  }
}

void add_warnings(std::vector<std::string>& into, const std::vector<std::string>& from) {
  for (const auto& w : from) {
    if (std::find(into.begin(), into.end(), w) == into.end()) into.push_back(w);
  }
}

// Evaluation plan shared by the static and flowed probes.
class Prober {
 public:
  Prober(const ProbeSignal& f, const ProbeOptions& opt) : f_(f), opt_(opt) {}

  // sup |W_window f| over pts; records the route and warnings.
  double sup(const AnalyticWindow& window, double b, double lambda,
             const std::vector<PhasePoint>& pts, WindowDecay& wd,
             std::vector<std::string>& warnings) {
    const auto* desc = std::get_if<SignalDescriptor>(&f_);
    double best = 0.0;
    if (desc && has_closed_form(*desc, window)) {
      wd.route = "oracle";
      for (const auto& p : pts) best = std::max(best, std::abs(wpt_analytic_oracle(*desc, window, p)));
      return best;
    }
    const SampledField& field = sampled();
    wd.route = "sampled";
    wd.floor = opt_.noise_floor * field.l2_norm() * window.norm();

    double max_xi = 0.0;
    for (const auto& p : pts) max_xi = std::max(max_xi, std::abs(p.xi));
    const Grid1D& g = field.grid();
    const double k = std::pow(lambda, b);
    if (!(1.0 / k >= 4.0 * g.dx()) ||
        !(max_xi + 6.0 * k <= std::numbers::pi / (2.0 * g.dx()))) {
      std::ostringstream os;
      os << "decay probe: lambda = " << lambda << " exceeds the resolution budget of the grid (dx = "
         << g.dx() << "); max admissible lambda is "
         << max_admissible_lambda(g, b, max_xi / lambda);
      throw ResolutionError(os.str());
    }
    const TransformResult tr = wpt_direct(Window(window), field, pts);
    add_warnings(warnings, tr.warnings);
    for (const auto& v : tr.values) best = std::max(best, std::abs(v));
    return best;
  }

 private:
  const SampledField& sampled() {
    if (const auto* field = std::get_if<SampledField>(&f_)) return *field;
    if (!cache_) {
      if (!opt_.sampling_grid) {
        throw UnsupportedError("decay probe: " + describe(std::get<SignalDescriptor>(f_)) +
                               " has no closed form for this window and no sampling grid was given");
      }
      cache_ = sample_signal(std::get<SignalDescriptor>(f_), *opt_.sampling_grid);
    }
    return *cache_;
  }

  const ProbeSignal& f_;
  const ProbeOptions& opt_;
  std::optional<SampledField> cache_;
};

DecayReport run_probe(const ProbeSignal& f, const PotentialModel* v,
                      const std::vector<WindowFamily>& windows, double t,
                      const ConicNeighborhood& nb, const std::vector<double>& lambdas,
                      const ProbeOptions& opt) {
  if (windows.empty()) throw ConfigurationError("decay probe: no window given");
  validate_lambdas(lambdas);
  const std::vector<PhasePoint> base = nb.samples();

  DecayReport report;
  report.candidate = {0.5 * (nb.k_lo + nb.k_hi), static_cast<double>(nb.directions.front())};
  report.lambdas = lambdas;
  Prober prober(f, opt);

  // Flowed arguments depend only on lambda, not on the window.
  std::vector<std::vector<PhasePoint>> args;
  for (double lambda : lambdas) {
    std::vector<PhasePoint> pts;
    pts.reserve(base.size());
    for (const auto& p : base) {
      if (v) {
        const FlowResult fr = integrate_flow(*v, t, p.x, lambda, p.xi, opt.flow_steps);
        pts.push_back({fr.x_at_zero(), fr.xi_at_zero()});
      } else {
        pts.push_back({p.x, lambda * p.xi});
      }
    }
    args.push_back(std::move(pts));
  }

  for (const auto& w : windows) {
    WindowDecay wd;
    wd.window = w.name();
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      const AnalyticWindow aw =
          v ? AnalyticWindow::evolved(w, lambdas[i], -t) : AnalyticWindow::scaled(w, lambdas[i]);
      wd.sup_magnitudes.push_back(prober.sup(aw, w.b(), lambdas[i], args[i], wd, report.warnings));
    }
    wd.fit = fit_decay_slope(lambdas, wd.sup_magnitudes, wd.floor);
    report.per_window.push_back(std::move(wd));
  }
  return report;
}

}  // namespace

DecayReport static_decay_probe(const ProbeSignal& f, const std::vector<WindowFamily>& windows,
                               const ConicNeighborhood& nb, const std::vector<double>& lambdas,
                               const ProbeOptions& opt) {
  return run_probe(f, nullptr, windows, 0.0, nb, lambdas, opt);
}

DecayReport flowed_decay_probe(const ProbeSignal& u0, const PotentialModel& v,
                               const std::vector<WindowFamily>& windows, double t,
                               const ConicNeighborhood& nb, const std::vector<double>& lambdas,
                               const ProbeOptions& opt) {
  return run_probe(u0, &v, windows, t, nb, lambdas, opt);
}

double candidate_half_width(const DetectionRegion& region) {
  if (region.half_width) return *region.half_width;
  if (region.x0.size() < 2) return 0.25;
  std::vector<double> xs = region.x0;
  std::sort(xs.begin(), xs.end());
  double spacing = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < xs.size(); ++i) spacing = std::min(spacing, xs[i] - xs[i - 1]);
  if (!(spacing > 0.0)) throw ConfigurationError("detect: candidate positions must be distinct");
  return 0.25 * spacing;
}

std::vector<CandidateResult> detect_wavefront_grid(const ProbeSignal& f,
                                                   const std::vector<WindowFamily>& windows,
                                                   const DetectionRegion& region,
                                                   const std::vector<double>& lambdas,
                                                   const Thresholds& th,
                                                   const ProbeOptions& opt) {
  if (region.x0.empty()) throw ConfigurationError("detect: no candidate positions");
  const double half_width = candidate_half_width(region);

  std::vector<CandidateResult> out;
  for (double x0 : region.x0) {
    for (int dir : region.directions) {
      const ConicNeighborhood nb = neighborhood_around(x0, dir, half_width, region.a,
                                                       region.x_samples, region.xi_samples);
      CandidateResult cr{x0, dir, static_decay_probe(f, windows, nb, lambdas, opt), {}, {}, true};
      cr.report.candidate = {x0, static_cast<double>(dir)};
      for (const auto& wd : cr.report.per_window) cr.per_window.push_back(classify(wd.fit, th));
      cr.classification = cr.per_window.front();
      std::optional<Verdict> seen;
      for (const auto& c : cr.per_window) {
        if (c.verdict == Verdict::Inconclusive) continue;
        if (seen && *seen != c.verdict) cr.windows_agree = false;
        seen = c.verdict;
      }
      out.push_back(std::move(cr));
    }
  }
  return out;
}

void write_classification_csv(std::ostream& os, const std::vector<CandidateResult>& results) {
  const auto old = os.precision(17);
  os << "x0,dir,slope,verdict\n";
  for (const auto& r : results) {
    os << r.x0 << ',' << r.direction << ',' << r.classification.slope << ','
       << to_string(r.classification.verdict) << '\n';
  }
  os.precision(old);
}

void write_decay_csv(std::ostream& os, const DecayReport& report) {
  const auto old = os.precision(17);
  os << "lambda,sup_mag\n";
  const auto& mags = report.sup_magnitudes();
  for (std::size_t i = 0; i < report.lambdas.size(); ++i) {
    os << report.lambdas[i] << ',' << mags[i] << '\n';
  }
  os.precision(old);
}

}  // namespace wptk
