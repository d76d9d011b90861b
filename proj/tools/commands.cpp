#include "commands.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "config.hpp"
#include "wptk/error.hpp"
#include "wptk/hamflow.hpp"
#include "wptk/schrodinger.hpp"
#include "wptk/verify.hpp"
#include "wptk/wavefront.hpp"
#include "wptk/wpt.hpp"

namespace wptk::cli {
namespace {

namespace fs = std::filesystem;

struct Context {
  fs::path dir;
  std::ostream& out;
  std::ostream& err;
};

using Job = std::function<int(Context&)>;

std::ofstream open_output(const fs::path& path) {
  std::ofstream os(path);
  if (!os) throw ConfigurationError("cannot write " + path.string());
  return os;
}

void warn(Context& ctx, const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) ctx.err << "warning: " << w << '\n';
}

Grid1D read_grid(Config& cfg, double x_min, double x_max, int n_points) {
  const double lo = cfg.real("grid.x_min", x_min);
  const double hi = cfg.real("grid.x_max", x_max);
  const int n = cfg.integer("grid.n_points", n_points);
  if (n < 1) throw ConfigurationError("grid.n_points must be positive");
  return make_grid(lo, hi, static_cast<std::size_t>(n));
}

SignalDescriptor read_signal(Config& cfg) {
  const std::string kind = cfg.text("signal.kind");
  SignalDescriptor d;
  if (kind == "gaussian") {
    d = signal::Gaussian{cfg.real("signal.center", 0.0), cfg.real("signal.width", 1.0),
                         cfg.real("signal.momentum", 0.0)};
  } else if (kind == "plane_wave") {
    d = signal::PlaneWave{cfg.real("signal.xi0")};
  } else if (kind == "heaviside") {
    d = signal::Heaviside{cfg.real("signal.jump", 0.0)};
  } else if (kind == "cusp") {
    d = signal::Cusp{cfg.real("signal.center", 0.0), cfg.real("signal.alpha"),
                     cfg.real("signal.xi0", 0.0)};
  } else if (kind == "dirac") {
    d = signal::Dirac{cfg.real("signal.center", 0.0)};
  } else {
    throw ConfigurationError("signal.kind: unknown kind '" + kind + "'");
  }
  validate(d);
  return d;
}

// "zero", "linear g=<real>", "subquad rho=<real> [C=<real>]" or "expression".
PotentialModel read_potential(Config& cfg) {
  const std::string spec = cfg.text("potential.model", std::string("zero"));
  std::istringstream is(spec);
  std::string name;
  is >> name;
  std::map<std::string, double> params;
  std::string item;
  while (is >> item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigurationError("potential.model: expected key=value, got '" + item + "'");
    try {
      params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ConfigurationError("potential.model: bad number in '" + item + "'");
    }
  }
  auto take = [&](const std::string& key, std::optional<double> fallback) {
    auto it = params.find(key);
    if (it == params.end()) {
      if (!fallback) throw ConfigurationError("potential.model: '" + name + "' needs " + key + "=");
      return *fallback;
    }
    const double v = it->second;
    params.erase(it);
    return v;
  };
  PotentialModel v = PotentialModel::zero();
  if (name == "zero") {
  } else if (name == "linear") {
    v = PotentialModel::linear(take("g", std::nullopt));
  } else if (name == "subquad") {
    const double rho = take("rho", std::nullopt);
    v = PotentialModel::subquad(rho, take("C", 8.0));
  } else if (name == "expression") {
    v = PotentialModel::expression(cfg.text("potential.expression"), cfg.real("potential.rho"),
                                   cfg.real("potential.C"), cfg.integer("potential.max_order", 4));
  } else {
    throw ConfigurationError("potential.model: unknown potential '" + name + "'");
  }
  if (!params.empty()) {
    throw ConfigurationError("potential.model: unused parameter '" + params.begin()->first + "'");
  }
  return v;
}

WindowFamily read_window(Config& cfg, double rho, std::vector<std::string>& warnings) {
  const std::string base = cfg.text("window.base", std::string("gaussian"));
  const bool corollary = cfg.flag("window.corollary", false);
  const double b_default = default_scale_exponent(rho, corollary);
  const double b = cfg.real("window.b", b_default);
  if (!(b > 0.0 && b < 1.0)) throw ConfigurationError("window.b must lie in (0, 1)");
  const double b_cap = std::min((2.0 - rho) / 4.0, 0.25);
  if (b > b_cap) {
    warnings.push_back("window.b = " + format_real(b) + " exceeds min((2 - rho)/4, 1/4) = " +
                       format_real(b_cap) + "; the propagation theorem is not guaranteed");
  }
  if (base == "gaussian") return WindowFamily::gaussian(b);
  if (base == "hermite") return WindowFamily::hermite(cfg.integer("window.order", 1), b);
  throw ConfigurationError("window.base: expected gaussian or hermite, got '" + base + "'");
}

std::vector<double> read_lambdas(Config& cfg, int lo_exp, int hi_exp) {
  if (cfg.has("lambda.list")) return cfg.reals("lambda.list");
  const double base = cfg.real("lambda.base", 2.0);
  const int lo = cfg.integer("lambda.min_exponent", lo_exp);
  const int hi = cfg.integer("lambda.max_exponent", hi_exp);
  if (!(base > 1.0) || hi < lo) throw ConfigurationError("lambda: need base > 1 and max >= min exponent");
  std::vector<double> out;
  for (int k = lo; k <= hi; ++k) out.push_back(std::pow(base, k));
  cfg.note("lambda.list", format_reals(out));
  return out;
}

std::vector<PhasePoint> read_probe_grid(Config& cfg, const std::string& section, int n) {
  const double x_lo = cfg.real(section + ".x_min", -2.0);
  const double x_hi = cfg.real(section + ".x_max", 2.0);
  const int nx = cfg.integer(section + ".nx", n);
  const double xi_lo = cfg.real(section + ".xi_min", -2.0);
  const double xi_hi = cfg.real(section + ".xi_max", 2.0);
  const int nxi = cfg.integer(section + ".nxi", n);
  if (nx < 1 || nxi < 1) throw ConfigurationError(section + ": probe counts must be positive");
  std::vector<PhasePoint> pts;
  for (int i = 0; i < nx; ++i) {
    const double x = nx == 1 ? x_lo : x_lo + (x_hi - x_lo) * i / (nx - 1);
    for (int j = 0; j < nxi; ++j) {
      pts.push_back({x, nxi == 1 ? xi_lo : xi_lo + (xi_hi - xi_lo) * j / (nxi - 1)});
    }
  }
  return pts;
}

Thresholds read_thresholds(Config& cfg) {
  Thresholds th{cfg.real("detect.theta_regular", -2.5), cfg.real("detect.theta_wavefront", -1.0)};
  if (!(th.regular < th.wavefront)) {
    throw ConfigurationError("detect: theta_regular must be below theta_wavefront");
  }
  return th;
}

DetectionRegion read_region(Config& cfg) {
  DetectionRegion r;
  r.x0 = cfg.reals("detect.x0", std::vector<double>{-2, -1, 0, 1, 2});
  r.directions.clear();
  for (double d : cfg.reals("detect.directions", std::vector<double>{-1, 1})) {
    if (d != 1.0 && d != -1.0) throw ConfigurationError("detect.directions: entries must be -1 or 1");
    r.directions.push_back(static_cast<int>(d));
  }
  if (cfg.has("detect.half_width")) r.half_width = cfg.real("detect.half_width");
  r.a = cfg.real("detect.a", 2.0);
  r.x_samples = cfg.integer("detect.x_samples", 5);
  r.xi_samples = cfg.integer("detect.xi_samples", 5);
  cfg.note("detect.resolved_half_width", format_real(candidate_half_width(r)));
  return r;
}

std::string tag(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// ---- commands -------------------------------------------------------------

Job cmd_wpt(Config& cfg, std::vector<std::string>& warnings) {
  const Grid1D g = read_grid(cfg, -32.0, 32.0, 4096);
  const SignalDescriptor sig = read_signal(cfg);
  const WindowFamily w = read_window(cfg, 0.0, warnings);
  const double lambda = cfg.real("lambda.value", 1.0);
  const int stride = cfg.integer("slice.x_stride", 16);
  const double xi_lo = cfg.real("slice.xi_min", -8.0);
  const double xi_hi = cfg.real("slice.xi_max", 8.0);
  const bool complex_values = cfg.flag("slice.complex", false);
  if (stride < 1) throw ConfigurationError("slice.x_stride must be positive");
  return [=](Context& ctx) {
    const SampledField f = sample_signal(sig, g);
    const Window phi(AnalyticWindow::scaled(w, lambda));
    const WptSlice slice = wpt_slice(phi, f, node_axis(g, static_cast<std::size_t>(stride)),
                                     dual_frequency_grid(g, xi_lo, xi_hi));
    warn(ctx, slice.warnings);
    auto os = open_output(ctx.dir / "wpt.csv");
    write_slice_csv(os, slice, complex_values);
    ctx.out << "wpt rows " << slice.x_axis.count << " cols " << slice.xi_axis.count << '\n';
    return kExitOk;
  };
}

Job cmd_evolve(Config& cfg, std::vector<std::string>&) {
  const Grid1D g = read_grid(cfg, -32.0, 32.0, 4096);
  const SignalDescriptor sig = read_signal(cfg);
  const PotentialModel v = read_potential(cfg);
  const double t = cfg.real("time.t");
  const int steps = cfg.integer("time.steps", 256);
  const double tol = cfg.real("tolerance.mass", 1e-10);
  return [=](Context& ctx) {
    const SampledField u0 = sample_signal(sig, g);
    const Propagated u = split_step_evolve(u0, v, t, steps);
    warn(ctx, u.warnings);
    auto os = open_output(ctx.dir / "field.csv");
    write_field_csv(os, u.field);
    const double drift = std::abs(u.field.l2_norm() - u0.l2_norm()) / u0.l2_norm();
    write_summary(ctx.out, {{"mass_conservation", "rel_drift", drift, tol, drift <= tol}});
    return drift <= tol ? kExitOk : kExitVerification;
  };
}

Job cmd_flow(Config& cfg, std::vector<std::string>&) {
  const PotentialModel v = read_potential(cfg);
  const double t = cfg.real("flow.t");
  const double x = cfg.real("flow.x");
  const double xi = cfg.real("flow.xi");
  const double lambda = cfg.real("flow.lambda", 1.0);
  const int steps = cfg.integer("flow.steps", 1024);
  return [=](Context& ctx) {
    const FlowResult fr = integrate_flow(v, t, x, lambda, xi, steps);
    auto os = open_output(ctx.dir / "trajectory.csv");
    write_trajectory_csv(os, fr);
    const auto old = ctx.out.precision(17);
    ctx.out << "flow x(0) " << fr.x_at_zero() << " xi(0) " << fr.xi_at_zero() << " action "
            << action_integral(fr, v) << '\n';
    ctx.out.precision(old);
    return kExitOk;
  };
}

Job cmd_detect(Config& cfg, std::vector<std::string>& warnings) {
  const SignalDescriptor sig = read_signal(cfg);
  const WindowFamily w = read_window(cfg, 0.0, warnings);
  std::vector<WindowFamily> windows{w};
  const int consensus = cfg.integer("window.consensus_order", 0);
  if (consensus > 0) windows.push_back(WindowFamily::hermite(consensus, w.b()));
  const std::vector<double> lambdas = read_lambdas(cfg, 4, 12);
  const DetectionRegion region = read_region(cfg);
  const Thresholds th = read_thresholds(cfg);
  ProbeOptions opt;
  if (cfg.has_section("grid")) opt.sampling_grid = read_grid(cfg, -16.0, 16.0, 1 << 18);
  opt.noise_floor = cfg.real("detect.noise_floor", opt.noise_floor);
  return [=](Context& ctx) {
    const auto results = detect_wavefront_grid(sig, windows, region, lambdas, th, opt);
    auto os = open_output(ctx.dir / "classification.csv");
    write_classification_csv(os, results);
    fs::create_directories(ctx.dir / "decay");
    std::size_t in_wf = 0;
    std::size_t disagree = 0;
    for (const auto& r : results) {
      warn(ctx, r.report.warnings);
      auto d = open_output(ctx.dir / "decay" /
                           ("x0_" + tag(r.x0) + "_dir_" + tag(r.direction) + ".csv"));
      write_decay_csv(d, r.report);
      if (r.classification.verdict == Verdict::InWavefront) ++in_wf;
      if (!r.windows_agree) ++disagree;
    }
    ctx.out << "detect candidates " << results.size() << " in_wavefront " << in_wf
            << " window_disagreements " << disagree << '\n';
    return kExitOk;
  };
}

Job cmd_verify_free(Config& cfg, std::vector<std::string>& warnings) {
  const Grid1D g = read_grid(cfg, -32.0, 32.0, 4096);
  const SignalDescriptor sig = read_signal(cfg);
  const WindowFamily w = read_window(cfg, 0.0, warnings);
  const double lambda = cfg.real("lambda.value", 1.0);
  const double t = cfg.real("time.t");
  const std::vector<PhasePoint> probes = read_probe_grid(cfg, "probes", 8);
  const bool strict = cfg.flag("verify.strict", false);
  const double tol = cfg.real("tolerance.relative", 1e-6);
  return [=](Context& ctx) {
    const IdentityReport r = verify_free_identity(sample_signal(sig, g), w, lambda, t, probes, strict);
    warn(ctx, r.warnings);
    auto os = open_output(ctx.dir / "identity.csv");
    write_identity_csv(os, probes, r);
    const bool pass = r.passes(tol);
    write_summary(ctx.out, {{"free_identity", "max_rel_err", r.max_rel_error, tol, pass}});
    return pass ? kExitOk : kExitVerification;
  };
}

Job cmd_verify_flow(Config& cfg, std::vector<std::string>& warnings) {
  const Grid1D g = read_grid(cfg, -32.0, 32.0, 4096);
  const SignalDescriptor sig = read_signal(cfg);
  const PotentialModel v = read_potential(cfg);
  const WindowFamily w = read_window(cfg, v.rho(), warnings);
  const double lambda = cfg.real("lambda.value", 1.0);
  const double t0 = cfg.real("time.t");
  const std::string mode_name = cfg.text("verify.mode", std::string("exact"));
  if (mode_name != "exact" && mode_name != "bound") {
    throw ConfigurationError("verify.mode: expected exact or bound");
  }
  const FlowIdentityMode mode = mode_name == "exact" ? FlowIdentityMode::Exact : FlowIdentityMode::Bound;
  FlowIdentityOptions fo;
  fo.split_steps = cfg.integer("verify.split_steps", fo.split_steps);
  fo.flow_steps = cfg.integer("verify.flow_steps", fo.flow_steps);
  const std::vector<PhasePoint> probes = read_probe_grid(cfg, "probes", 4);
  const double tol = cfg.real("tolerance.relative", 1e-5);
  if (mode == FlowIdentityMode::Exact && !v.vanishing_second_derivative()) {
    throw ModeError("verify.mode = exact needs a potential with vanishing second derivative, got " +
                    v.name());
  }
  return [=](Context& ctx) {
    const FlowIdentityReport r =
        verify_flow_identity(sample_signal(sig, g), v, w, lambda, t0, probes, mode, fo);
    warn(ctx, r.comparison.warnings);
    auto os = open_output(ctx.dir / "identity.csv");
    write_identity_csv(os, probes, r.comparison);
    if (mode == FlowIdentityMode::Bound) {
      ctx.out << "flow_identity_bound max_abs_err " << std::scientific << r.comparison.max_abs_error
              << " ru_scale " << r.ru_scale << std::defaultfloat << '\n';
      return kExitOk;
    }
    const bool pass = r.comparison.passes(tol);
    write_summary(ctx.out, {{"flow_identity", "max_rel_err", r.comparison.max_rel_error, tol, pass}});
    return pass ? kExitOk : kExitVerification;
  };
}

Job cmd_residual(Config& cfg, std::vector<std::string>& warnings) {
  const Grid1D g = read_grid(cfg, -32.0, 32.0, 4096);
  const SignalDescriptor sig = read_signal(cfg);
  const PotentialModel v = read_potential(cfg);
  const WindowFamily w = read_window(cfg, v.rho(), warnings);
  const double lambda = cfg.real("lambda.value", 1.0);
  const double t = cfg.real("time.t", 0.5);
  const std::vector<double> hs = cfg.reals("residual.h", std::vector<double>{0.1, 0.05, 0.025});
  ResidualOptions ro;
  ro.stencil_order = cfg.integer("residual.stencil_order", ro.stencil_order);
  ro.split_fraction = cfg.real("residual.split_fraction", ro.split_fraction);
  ro.x_lo = cfg.real("probes.x_min", ro.x_lo);
  ro.x_hi = cfg.real("probes.x_max", ro.x_hi);
  ro.nx = cfg.integer("probes.nx", ro.nx);
  ro.xi_lo = cfg.real("probes.xi_min", ro.xi_lo);
  ro.xi_hi = cfg.real("probes.xi_max", ro.xi_hi);
  ro.nxi = cfg.integer("probes.nxi", ro.nxi);
  const double factor = cfg.real("tolerance.min_factor", 4.0);
  if (hs.size() < 2) throw ConfigurationError("residual.h needs at least two levels");
  return [=](Context& ctx) {
    const SampledField u0 = sample_signal(sig, g);
    auto os = open_output(ctx.dir / "residual.csv");
    const auto old = os.precision(17);
    os << "h,split_dt,sup_norm,l2_norm,max_ru,factor\n";
    double prev = 0.0;
    double worst = std::numeric_limits<double>::infinity();
    for (double h : hs) {
      const ResidualReport r = pde_residual(u0, v, w, lambda, t, h, ro);
      warn(ctx, r.warnings);
      const double f = prev > 0.0 ? prev / r.l2_norm : std::numeric_limits<double>::quiet_NaN();
      if (prev > 0.0) worst = std::min(worst, f);
      os << h << ',' << r.split_dt << ',' << r.sup_norm << ',' << r.l2_norm << ',' << r.max_ru
         << ',' << f << '\n';
      prev = r.l2_norm;
    }
    os.precision(old);
    const bool pass = worst >= factor;
    write_summary(ctx.out, {{"transformed_equation", "min_refinement_factor", worst, factor, pass}});
    return pass ? kExitOk : kExitVerification;
  };
}

Job cmd_roundtrip(Config& cfg, std::vector<std::string>& warnings) {
  const SignalDescriptor sig = read_signal(cfg);
  const PotentialModel v = read_potential(cfg);
  const WindowFamily w = read_window(cfg, v.rho(), warnings);
  const double t = cfg.real("time.t");
  const std::vector<double> lambdas = read_lambdas(cfg, 3, 8);
  RoundtripOptions ro;
  ro.grid = read_grid(cfg, -512.0, 512.0, 1 << 19);
  ro.mollifier_factor = cfg.real("roundtrip.mollifier_factor", ro.mollifier_factor);
  ro.split_steps = cfg.integer("time.steps", ro.split_steps);
  ro.region = read_region(cfg);
  ro.probe.noise_floor = cfg.real("detect.noise_floor", ro.probe.noise_floor);
  ro.probe.flow_steps = cfg.integer("roundtrip.flow_steps", ro.probe.flow_steps);
  const Thresholds th = read_thresholds(cfg);
  return [=](Context& ctx) {
    const RoundtripReport r = theorem_roundtrip(sig, v, w, t, lambdas, th, ro);
    warn(ctx, r.warnings);
    auto os = open_output(ctx.dir / "roundtrip.csv");
    write_roundtrip_csv(os, r);
    if (r.mollifier_width) ctx.out << "mollifier_width " << *r.mollifier_width << '\n';
    const double n = static_cast<double>(r.disagreements());
    write_summary(ctx.out, {{"roundtrip", "disagreements", n, 0.0, n == 0.0}});
    return n == 0.0 ? kExitOk : kExitVerification;
  };
}

Job cmd_bounds(Config& cfg, std::vector<std::string>& warnings) {
  const PotentialModel v = read_potential(cfg);
  const WindowFamily w = read_window(cfg, v.rho(), warnings);
  const double k_lo = cfg.real("bounds.k_min", -1.0);
  const double k_hi = cfg.real("bounds.k_max", 1.0);
  const double a = cfg.real("bounds.a", 2.0);
  const double t0 = cfg.real("bounds.t0", 1.0);
  const double p = cfg.real("bounds.p", 2.0 * w.b());
  BoundOptions bo;
  bo.x_samples = cfg.integer("bounds.x_samples", bo.x_samples);
  bo.xi_samples = cfg.integer("bounds.xi_samples", bo.xi_samples);
  bo.s_steps = cfg.integer("bounds.s_steps", bo.s_steps);
  const std::vector<double> lambdas = read_lambdas(cfg, 2, 12);
  return [=](Context& ctx) {
    const BoundReport r = check_flow_bounds(v, k_lo, k_hi, a, t0, lambdas, p, bo);
    auto os = open_output(ctx.dir / "bounds.csv");
    write_bound_csv(os, r);
    if (r.outside_proved_regime) ctx.err << "warning: rho < 1 lies outside the proved regime\n";
    ctx.out << "bounds sampling " << r.sample_density << '\n';
    ctx.out << "bounds lambda0 " << (r.lambda0 ? format_real(*r.lambda0) : "not attained on tested range")
            << '\n';
    write_summary(ctx.out, {{"trajectory_bounds", "lambda0", r.lambda0.value_or(NAN), 0.0,
                             r.lambda0.has_value()}});
    return r.lambda0 ? kExitOk : kExitVerification;
  };
}

using Builder = Job (*)(Config&, std::vector<std::string>&);

const std::map<std::string, Builder>& registry() {
  static const std::map<std::string, Builder> r{
      {"wpt", cmd_wpt},           {"evolve", cmd_evolve},
      {"flow", cmd_flow},         {"detect", cmd_detect},
      {"verify-free", cmd_verify_free}, {"verify-flow", cmd_verify_flow},
      {"residual", cmd_residual}, {"roundtrip", cmd_roundtrip},
      {"bounds", cmd_bounds},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, v] : registry()) n.push_back(k);
    return n;
  }();
  return names;
}

int run(const std::string& command, const std::string& config_path, std::ostream& out,
        std::ostream& err) {
  const auto it = registry().find(command);
  if (it == registry().end()) {
    err << "error: unknown command '" << command << "'\n";
    return kExitConfig;
  }
  Job job;
  Context ctx{{}, out, err};
  try {
    Config cfg = Config::load(config_path);
    ctx.dir = cfg.text("output.dir", std::string("wptk-out"));
    std::vector<std::string> warnings;
    job = it->second(cfg, warnings);
    cfg.check_unused();
    cfg.note("run.command", command);
    cfg.note("run.config", config_path);

    std::error_code ec;
    fs::create_directories(ctx.dir, ec);
    if (ec) throw ConfigurationError("cannot create output directory " + ctx.dir.string());
    auto manifest = open_output(ctx.dir / "manifest.ini");
    boost::property_tree::write_ini(manifest, cfg.resolved());
    if (!manifest) throw ConfigurationError("cannot write manifest");
    warn(ctx, warnings);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  // Exceptions past this point come from inputs the schema cannot rule out
  // (unsupported pairs, resolution budget, escaping trajectories); exit 2 is
  // reserved for tolerance failures.
  try {
    return job(ctx);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace wptk::cli
