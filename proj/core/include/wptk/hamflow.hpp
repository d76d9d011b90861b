#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wptk/potential.hpp"

namespace wptk {

/// Trajectory of x' = xi, xi' = -dV/dx(s, x) with terminal data (x, xi) at
/// s = t, sampled at s_k = t k / steps for k = 0..steps.
struct FlowResult {
  double t = 0.0;
  double x = 0.0;
  /// Terminal momentum, already including the lambda factor.
  double xi = 0.0;
  std::vector<double> s;
  std::vector<double> x_path;
  std::vector<double> xi_path;
  int steps = 0;

  double x_at_zero() const { return x_path.front(); }
  double xi_at_zero() const { return xi_path.front(); }
};

/// Classical RK4 from s = t back to s = 0 with terminal data (x, lambda xi).
/// V = zero takes the exact straight line. Throws TrajectoryEscape when the
/// state stops being finite.
FlowResult integrate_flow(const PotentialModel& v, double t, double x, double lambda, double xi,
                          int n_steps);

/// Same flow between arbitrary times: state (x, xi) at s = from, integrated to
/// s = to. Returns the state at `to`.
struct PhaseState {
  double x;
  double xi;
};
PhaseState flow_between(const PotentialModel& v, double from, double to, double x, double xi,
                        int n_steps);

struct PicardIterates {
  double t0;
  double x;
  double lambda;
  double xi;
  /// Quadrature nodes on [0, t0].
  std::vector<double> s;
  /// iterates[N][k] = x^{(N)}(s_k).
  std::vector<std::vector<double>> iterates;
};

/// x^{(N+1)}(s) = x + (s - t0) lambda xi - int_{t0}^{s} (s - r) dV/dx(r, x^{(N)}(r)) dr,
/// starting from the straight line, with trapezoid quadrature on n_quad nodes.
PicardIterates picard_iterate(const PotentialModel& v, double t0, double x, double lambda,
                              double xi, int iterations, int n_quad);

struct BoundRow {
  double lambda;
  double min_ratio;
  double max_ratio;
  std::size_t samples;
  bool pass;
};

struct BoundReport {
  double a;
  double p;
  double t0;
  std::vector<BoundRow> rows;
  /// Smallest tested lambda from which every larger tested lambda passes.
  std::optional<double> lambda0;
  /// rho < 1 lies outside the regime where the bound is proved.
  bool outside_proved_regime = false;
  std::string sample_density;
};

struct BoundOptions {
  int x_samples = 9;
  int xi_samples = 9;
  int s_steps = 256;
};

/// Sweeps |x(s)| / (|t*| lambda) with t* = s - t0 over x in [k_lo, k_hi],
/// xi in +-[1/a, a], and s with lambda^{p-1} <= |t*| <= t0. Passing means the
/// ratio stays in [1/(2a), 2a].
BoundReport check_flow_bounds(const PotentialModel& v, double k_lo, double k_hi, double a,
                              double t0, const std::vector<double>& lambdas, double p,
                              const BoundOptions& opt = {});

/// A = int_0^t (xi(s)^2 / 2 + V~(s, x(s))) ds by the trapezoid rule on fr's nodes.
double action_integral(const FlowResult& fr, const PotentialModel& v);

struct RemainderReport {
  std::vector<double> lambdas;
  std::vector<double> delta1;
  std::vector<double> delta2;
  /// Set unless the deltas vanish identically.
  std::optional<double> slope1;
  std::optional<double> slope2;
  bool exact_zero = false;
};

/// delta1 = x(0; t, x, lambda xi) - (x - lambda t xi), delta2 = xi(0) - lambda xi,
/// with log-log slopes over lambdas.
RemainderReport straightline_remainder(const PotentialModel& v, double t, double x, double xi,
                                       const std::vector<double>& lambdas,
                                       int steps_per_unit_lambda = 64);

void write_trajectory_csv(std::ostream& os, const FlowResult& fr);
void write_bound_csv(std::ostream& os, const BoundReport& r);

}  // namespace wptk
