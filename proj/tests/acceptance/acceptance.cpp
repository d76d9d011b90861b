// Acceptance run: one PASS/FAIL line per criterion, detail lines indented.
// Usage: wptk_acceptance [output-dir]

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "wptk/hamflow.hpp"
#include "wptk/quadrature.hpp"
#include "wptk/schrodinger.hpp"
#include "wptk/verify.hpp"
#include "wptk/wavefront.hpp"
#include "wptk/wpt.hpp"

using namespace wptk;
namespace fs = std::filesystem;

namespace {

fs::path g_out = "acceptance-out";

struct Outcome {
  std::string metric;
  double value;
  std::string bound;  // e.g. "<= 1e-06"
  bool pass;
};

void detail(const std::string& s) { std::cout << "    " << s << '\n'; }

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << v;
  return os.str();
}

std::string fix(double v, int digits = 3) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::vector<double> powers_of_two(int lo, int hi) {
  std::vector<double> out;
  for (int k = lo; k <= hi; ++k) out.push_back(std::ldexp(1.0, k));
  return out;
}

std::vector<PhasePoint> probe_grid(int n, double lo, double hi) {
  std::vector<PhasePoint> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.push_back({lo + (hi - lo) * i / (n - 1), lo + (hi - lo) * j / (n - 1)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome free_representation() {
  const Grid1D g = make_grid(-32, 32, 4096);
  const SampledField u0 = sample_signal(signal::Gaussian{}, g);
  const auto probes = probe_grid(8, -2, 2);
  double worst = 0;
  bool clean = true;
  for (const WindowFamily& w : {WindowFamily::gaussian(0.25), WindowFamily::hermite(2, 0.25)}) {
    for (double t : {-1.0, -0.25, 0.25, 1.0}) {
      for (double lambda : {1.0, 4.0, 16.0}) {
        const IdentityReport r = verify_free_identity(u0, w, lambda, t, probes, true);
        worst = std::max(worst, r.max_rel_error);
        clean = clean && !r.strict_failure;
      }
    }
  }
  detail("gaussian and hermite(2) windows, t in {+-0.25, +-1}, lambda in {1, 4, 16}, 64 probes");
  return {"max_rel_err", worst, "<= 1e-06", clean && worst <= 1e-6};
}

Outcome inversion() {
  const Grid1D g = make_grid(-16, 16, 512);
  const Window phi(AnalyticWindow::scaled(WindowFamily::gaussian(0.25), 1.0));
  const std::vector<std::pair<std::string, SampledField>> signals{
      {"gaussian", sample_signal(signal::Gaussian{}, g)},
      {"gaussian momentum 3", sample_signal(signal::Gaussian{0.5, 1.0, 3.0}, g)},
      {"two packets", sample_signal(signal::Gaussian{-2, 0.8, -2}, g) +
                          cplx(0.5, 0.5) * sample_signal(signal::Gaussian{1.5, 1.2, 1}, g)}};
  double worst = 0;
  for (const auto& [name, f] : signals) {
    const WptSlice s = wpt_slice(phi, f, node_axis(g, 1), full_dual_frequency_grid(g));
    const double e = (wpt_inverse(s, phi) - f).l2_norm() / f.l2_norm();
    detail(name + ": rel_l2_err " + sci(e));
    worst = std::max(worst, e);
  }
  return {"max_rel_l2_err", worst, "<= 1e-06", worst <= 1e-6};
}

Outcome closed_form_transform() {
  const Grid1D g = make_grid(-32, 32, 4096);
  const SampledField f = sample_signal(signal::Gaussian{}, g);
  const Window phi(AnalyticWindow::scaled(WindowFamily::gaussian(0.25), 1.0));
  const auto probes = probe_grid(64, -4, 4);
  const auto w = wpt_direct(phi, f, probes).values;
  double worst = 0;
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const double x = probes[k].x, xi = probes[k].xi;
    const cplx exact = std::exp(-(x * x + xi * xi) / 4.0) * std::polar(1.0, -x * xi / 2.0);
    worst = std::max(worst, std::abs(w[k] - exact));
  }
  detail("64x64 probes on [-4, 4]^2");
  return {"max_abs_err", worst, "<= 1e-08", worst <= 1e-8};
}

Outcome mass_and_order() {
  const Grid1D g = make_grid(-32, 32, 4096);
  const SampledField u0 = sample_signal(signal::Gaussian{}, g);
  double drift = 0;
  for (const PotentialModel& v : {PotentialModel::zero(), PotentialModel::linear(1), PotentialModel::subquad(1)}) {
    const Propagated u = split_step_evolve(u0, v, 0.5, 4096);
    const double d = std::abs(u.field.l2_norm() - u0.l2_norm()) / u0.l2_norm();
    detail(v.name() + ": mass drift over 4096 steps " + sci(d));
    drift = std::max(drift, d);
  }
  const PotentialModel lin = PotentialModel::linear(1);
  const SampledField ref = split_step_evolve(u0, lin, 0.5, 8192).field;
  std::vector<double> log_dt, log_err;
  for (int n : {16, 32, 64, 128, 256}) {
    const double e = (split_step_evolve(u0, lin, 0.5, n).field - ref).l2_norm();
    log_dt.push_back(std::log(0.5 / n));
    log_err.push_back(std::log(e));
  }
  const double slope = least_squares_slope(log_dt, log_err);
  const bool order_ok = std::abs(slope - 2.0) <= 0.1;
  detail("strang order slope (linear(1), n = 16..256 vs 8192) " + fix(slope, 4) + " within 2.0 +- 0.1: " +
         (order_ok ? "yes" : "no"));
  return {"max_rel_drift", drift, "<= 1e-10", drift <= 1e-10 && order_ok};
}

Outcome flow_correctness() {
  const FlowResult lin = integrate_flow(PotentialModel::linear(1), 1.0, 0.0, 1.0, 2.0, 64);
  const double e_lin = std::max(std::abs(lin.x_at_zero() + 2.5), std::abs(lin.xi_at_zero() - 3.0));
  detail("linear(1) x(0) = " + fix(lin.x_at_zero(), 12) + ", xi(0) = " + fix(lin.xi_at_zero(), 12) +
         ", err " + sci(e_lin) + " (tol 1e-10)");

  const PotentialModel sq = PotentialModel::subquad(1);
  const FlowResult whole = integrate_flow(sq, 1.0, 0.3, 16, 1.2, 2000);
  const PhaseState mid = flow_between(sq, 1.0, 0.4, 0.3, 16 * 1.2, 1000);
  const PhaseState two = flow_between(sq, 0.4, 0.0, mid.x, mid.xi, 700);
  const double e_group = std::max(std::abs(whole.x_at_zero() - two.x), std::abs(whole.xi_at_zero() - two.xi));
  detail("group property t -> 0.4 -> 0 vs t -> 0: " + sci(e_group) + " (tol 1e-08)");

  const PicardIterates p = picard_iterate(sq, 1.0, 0.0, 256, 1.0, 6, 4001);
  const FlowResult rk = integrate_flow(sq, 1.0, 0.0, 256, 1.0, 4000);
  double err = 0, scale = 0;
  for (std::size_t k = 0; k < rk.s.size(); ++k) {
    err = std::max(err, std::abs(p.iterates[6][k] - rk.x_path[k]));
    scale = std::max(scale, std::abs(rk.x_path[k]));
  }
  const double e_picard = err / scale;
  detail("picard N = 6 vs RK, subquad(1), lambda = 256: rel " + sci(e_picard) + " (tol 1e-06)");
  const double worst = std::max({e_lin / 1e-10, e_group / 1e-8, e_picard / 1e-6});
  return {"worst_err_over_tol", worst, "<= 1", worst <= 1.0};
}

Outcome trajectory_bounds() {
  const double b = 0.25;
  const BoundReport r =
      check_flow_bounds(PotentialModel::subquad(1), -1, 1, 2, 1, powers_of_two(2, 12), 2 * b);
  std::ofstream os(g_out / "bounds.csv");
  write_bound_csv(os, r);
  for (const auto& row : r.rows) {
    detail("lambda " + fix(row.lambda, 0) + ": ratio in [" + fix(row.min_ratio, 4) + ", " + fix(row.max_ratio, 4) +
           "] " + (row.pass ? "ok" : "violated"));
  }
  detail("report written to " + (g_out / "bounds.csv").string());
  return {"lambda0", r.lambda0.value_or(NAN), "found in [4, 4096]", r.lambda0.has_value()};
}

Outcome corollary_remainder() {
  const auto lambdas = powers_of_two(4, 12);
  const RemainderReport s = straightline_remainder(PotentialModel::subquad(0.5), 1, 0, 1, lambdas);
  const RemainderReport z = straightline_remainder(PotentialModel::zero(), 1, 0, 1, lambdas);
  const double s1 = s.slope1.value_or(NAN), s2 = s.slope2.value_or(NAN);
  detail("subquad(0.5): slope |delta1| " + fix(s1) + ", slope |delta2| " + fix(s2));
  detail(std::string("zero: exact zeros ") + (z.exact_zero ? "yes" : "no"));
  const double worst = std::max(s1, s2);
  return {"max_slope", worst, "<= -0.35", worst <= -0.35 && z.exact_zero};
}

Outcome wavefront_detection() {
  const auto lambdas = powers_of_two(4, 12);
  DetectionRegion region;
  region.x0 = {-2, -1, 0, 1, 2};
  const std::vector<WindowFamily> ws{WindowFamily::gaussian(0.25), WindowFamily::hermite(1, 0.25)};
  ProbeOptions opt;
  opt.sampling_grid = make_grid(-16, 16, 1 << 18);

  bool ok = true;
  auto sweep = [&](const std::string& name, const SignalDescriptor& f, bool singular_at_zero) {
    const auto rs = detect_wavefront_grid(f, ws, region, lambdas, {}, opt);
    std::ostringstream line;
    line << name << ":";
    for (const auto& r : rs) {
      const Verdict expect = singular_at_zero && r.x0 == 0.0 ? Verdict::InWavefront : Verdict::Regular;
      const bool hit = r.classification.verdict == expect && r.windows_agree;
      ok = ok && hit;
      if (r.direction == 1) line << " x0=" << r.x0 << " " << fix(r.classification.slope, 2);
      if (!hit) line << " [x0=" << r.x0 << " dir " << r.direction << " " << to_string(r.classification.verdict) << "]";
    }
    detail(line.str());
  };
  sweep("dirac", signal::Dirac{}, true);
  sweep("heaviside", signal::Heaviside{}, true);
  sweep("gaussian", signal::Gaussian{}, false);

  double worst = 0;
  for (double b : {0.125, 0.25}) {
    for (int dir : {-1, 1}) {
      const DecayReport r = static_decay_probe(signal::Dirac{}, {WindowFamily::gaussian(b)},
                                               neighborhood_around(0, dir, 0.25), lambdas);
      worst = std::max(worst, std::abs(r.slope() - b / 2));
      if (dir == 1) detail("dirac slope at x0 = 0, b = " + fix(b) + ": " + fix(r.slope(), 4));
    }
  }
  detail(std::string("verdict suite (b = 1/4, gaussian + hermite(1) consensus): ") + (ok ? "as expected" : "MISMATCH"));
  return {"max_|slope-b/2|", worst, "<= 0.05", ok && worst <= 0.05};
}

Outcome flowed_identity() {
  const Grid1D g = make_grid(-32, 32, 4096);
  const SampledField u0 = sample_signal(signal::Gaussian{}, g);
  std::vector<PhasePoint> probes;
  for (int i = 0; i < 8; ++i) probes.push_back({-1 + 0.3 * i, (i % 2 ? 1 : -1) * (0.5 + 0.2 * i)});
  double worst = 0;
  for (double lambda : {1.0, 16.0}) {
    const FlowIdentityReport r =
        verify_flow_identity(u0, PotentialModel::linear(1), WindowFamily::gaussian(0.25), lambda, 0.5, probes);
    detail("lambda " + fix(lambda, 0) + ": rel " + sci(r.comparison.max_rel_error));
    worst = std::max(worst, r.comparison.max_rel_error);
  }
  return {"max_rel_err", worst, "<= 1e-05", worst <= 1e-5};
}

Outcome pde_residual_refinement() {
  const Grid1D g = make_grid(-32, 32, 4096);
  const SampledField u0 = sample_signal(signal::Gaussian{}, g);
  const WindowFamily w = WindowFamily::gaussian(0.25);
  const std::vector<double> hs{0.1, 0.05, 0.025};
  auto ratios = [&](const PotentialModel& v, const ResidualOptions& opt) {
    std::vector<double> norms;
    for (double h : hs) norms.push_back(pde_residual(u0, v, w, 1.0, 0.5, h, opt).l2_norm);
    return std::vector<double>{norms[0] / norms[1], norms[1] / norms[2]};
  };
  ResidualOptions fourth;
  fourth.stencil_order = 4;
  fourth.split_fraction = 1.0 / 16;
  ResidualOptions second;
  double worst = INFINITY;
  for (const PotentialModel& v : {PotentialModel::zero(), PotentialModel::linear(1), PotentialModel::subquad(1)}) {
    const auto r4 = ratios(v, fourth);
    const auto r2 = ratios(v, second);
    worst = std::min({worst, r4[0], r4[1]});
    detail(v.name() + ": factors " + fix(r4[0], 2) + ", " + fix(r4[1], 2) + " (five-point stencil); " +
           fix(r2[0], 4) + ", " + fix(r2[1], 4) + " (three-point stencil)");
  }
  return {"min_factor", worst, ">= 4", worst >= 4.0};
}

Outcome theorem_roundtrip_matrix() {
  const auto lambdas = powers_of_two(3, 8);
  RoundtripOptions opt;
  opt.region.x0 = {-2, 0, 2};
  opt.region.half_width = 0.25;
  std::ofstream os(g_out / "roundtrip.csv");
  std::size_t total = 0, compared = 0;
  for (const SignalDescriptor& u0 :
       {SignalDescriptor{signal::Gaussian{}}, SignalDescriptor{signal::Dirac{}}, SignalDescriptor{signal::Heaviside{}}}) {
    for (const PotentialModel& v : {PotentialModel::zero(), PotentialModel::linear(1), PotentialModel::subquad(1)}) {
      for (double t : {0.0, 0.5}) {
        const RoundtripReport r = theorem_roundtrip(u0, v, WindowFamily::gaussian(0.25), t, lambdas, {}, opt);
        write_roundtrip_csv(os, r);
        std::size_t n = 0;
        for (const auto& row : r.rows) {
          if (row.static_side.verdict != Verdict::Inconclusive && row.flowed_side.verdict != Verdict::Inconclusive) ++n;
        }
        compared += n;
        total += r.disagreements();
        std::ostringstream line;
        line << r.signal << " | " << r.potential << " | t=" << t << ": " << r.disagreements() << " of " << n
             << " compared rows disagree";
        detail(line.str());
      }
    }
  }
  detail(std::to_string(compared) + " rows compared; table in " + (g_out / "roundtrip.csv").string());
  return {"disagreements", static_cast<double>(total), "== 0", total == 0};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_out = argv[1];
  fs::create_directories(g_out);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"free representation formula", free_representation},
      {"inversion round trip", inversion},
      {"closed-form transform oracle", closed_form_transform},
      {"mass conservation and splitting order", mass_and_order},
      {"flow correctness", flow_correctness},
      {"trajectory bounds", trajectory_bounds},
      {"straight-line remainder decay", corollary_remainder},
      {"wavefront detection", wavefront_detection},
      {"flowed identity (exact mode)", flowed_identity},
      {"transformed equation residual", pde_residual_refinement},
      {"propagation round trip", theorem_roundtrip_matrix},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      detail(std::string("exception: ") + e.what());
      o = {"exception", NAN, "", false};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::cout << "criterion " << std::setw(2) << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << "  "
              << criteria[i].first << ": " << o.metric << " = " << sci(o.value) << " (" << o.bound << ")  ["
              << fix(secs, 1) << " s]" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
