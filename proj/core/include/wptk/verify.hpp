#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wptk/field.hpp"
#include "wptk/potential.hpp"
#include "wptk/signal.hpp"
#include "wptk/wavefront.hpp"
#include "wptk/window.hpp"
#include "wptk/wpt.hpp"

namespace wptk {

/// Two-path comparison over a probe set. The relative error is
/// max |lhs - rhs| / max |lhs|.
struct IdentityReport {
  std::size_t probes = 0;
  double max_abs_error = 0.0;
  double max_rel_error = 0.0;
  double max_lhs = 0.0;
  std::vector<cplx> lhs;
  std::vector<cplx> rhs;
  std::vector<std::string> warnings;
  /// Set in strict mode when a warning was raised.
  bool strict_failure = false;

  bool passes(double tolerance) const { return !strict_failure && max_rel_error <= tolerance; }
};

/// W_{phi_lambda^{(t)}} [U0(t) u0](x, xi) against
/// exp(-i t xi^2 / 2) W_{phi_lambda} u0(x - xi t, xi).
IdentityReport verify_free_identity(const SampledField& u0, const WindowFamily& w, double lambda,
                                    double t, const std::vector<PhasePoint>& probes,
                                    bool strict = false);

/// Second-order Taylor remainder of V inside the transformed equation:
///   int conj(phi^{(t)}(y - x)) m(x, y) (y - x)^2 u(t, y) e^{-i xi y} dy,
///   m(x, y) = int_0^1 V''(t, x + theta (y - x)) (1 - theta) dtheta,
/// with phi^{(t)} = U0(t) phi_lambda. Trapezoid in y, Gauss-Legendre in theta.
cplx ru_quadrature(const SampledField& u_t, const PotentialModel& v, const WindowFamily& w,
                   double lambda, double t, const PhasePoint& p, int theta_nodes = 16);

struct ResidualOptions {
  double x_lo = -2.0;
  double x_hi = 2.0;
  int nx = 9;
  double xi_lo = -2.0;
  double xi_hi = 2.0;
  int nxi = 9;
  /// Split-step size as a fraction of the finite-difference step h.
  double split_fraction = 0.25;
  /// Centred difference order in t, x and xi: 2 (three-point) or 4 (five-point).
  int stencil_order = 2;
};

struct ResidualReport {
  double h = 0.0;
  double split_dt = 0.0;
  double sup_norm = 0.0;
  /// Root mean square over the probe grid.
  double l2_norm = 0.0;
  double max_ru = 0.0;
  std::vector<std::string> warnings;
};

/// Residual of
///   (i d/dt + i xi d/dx - i V'(t, x) d/dxi - xi^2 / 2 - V~(t, x)) W - Ru
/// with W(t, x, xi) = W_{phi_lambda^{(t)}} u(t)(x, xi), u from split-step
/// evolution of u0, centred differences of step h in t, x and xi.
/// Throws ConfigurationError unless opt.stencil_order is 2 or 4.
ResidualReport pde_residual(const SampledField& u0, const PotentialModel& v,
                            const WindowFamily& w, double lambda, double t, double h,
                            const ResidualOptions& opt = {});

enum class FlowIdentityMode { Exact, Bound };

struct FlowIdentityReport {
  FlowIdentityMode mode = FlowIdentityMode::Exact;
  IdentityReport comparison;
  /// Bound mode: max over probes of t0 |Ru(t0, x, lambda xi)|.
  double ru_scale = 0.0;
};

struct FlowIdentityOptions {
  int split_steps = 512;
  int flow_steps = 1024;
};

/// W_{phi_lambda} u(t0)(x, lambda xi) against
/// exp(-i A) W_{phi_lambda^{(-t0)}} u0(x(0; t0, x, lambda xi), xi(0; t0, x, lambda xi)),
/// A the action along the flow. Exact mode needs V'' = 0 and throws ModeError otherwise.
FlowIdentityReport verify_flow_identity(const SampledField& u0, const PotentialModel& v,
                                        const WindowFamily& w, double lambda, double t0,
                                        const std::vector<PhasePoint>& probes,
                                        FlowIdentityMode mode = FlowIdentityMode::Exact,
                                        const FlowIdentityOptions& opt = {});

struct RoundtripOptions {
  Grid1D grid = make_grid(-512.0, 512.0, std::size_t{1} << 19);
  /// Dirac data is replaced on the static side by a unit-mass Gaussian of
  /// width mollifier_factor * dx.
  double mollifier_factor = 4.0;
  int split_steps = 32;
  DetectionRegion region;
  ProbeOptions probe;
};

struct RoundtripRow {
  double x0;
  int direction;
  Classification static_side;
  Classification flowed_side;
  bool disagree;
};

struct RoundtripReport {
  std::string signal;
  std::string potential;
  double t = 0.0;
  std::optional<double> mollifier_width;
  std::vector<RoundtripRow> rows;
  std::vector<std::string> warnings;

  std::size_t disagreements() const;
};

/// Static probe on u(t) (split-step) against the flowed probe on u0 at each candidate.
RoundtripReport theorem_roundtrip(const SignalDescriptor& u0, const PotentialModel& v,
                                  const WindowFamily& w, double t,
                                  const std::vector<double>& lambdas, const Thresholds& th,
                                  const RoundtripOptions& opt);

struct CheckLine {
  std::string name;
  std::string metric;
  double value;
  double tolerance;
  bool pass;
};

/// One line per check: `<name> <metric> <value> PASS|FAIL`.
void write_summary(std::ostream& os, const std::vector<CheckLine>& lines);

void write_identity_csv(std::ostream& os, const std::vector<PhasePoint>& probes,
                        const IdentityReport& r);
void write_roundtrip_csv(std::ostream& os, const RoundtripReport& r);

}  // namespace wptk
