#pragma once

#include <string>
#include <vector>

#include "wptk/field.hpp"
#include "wptk/potential.hpp"
#include "wptk/window.hpp"

namespace wptk {

/// A propagated field with any boundary-contamination warnings.
struct Propagated {
  SampledField field;
  std::vector<std::string> warnings;
};

/// U0(t) f: the Fourier multiplier exp(-i t k^2 / 2) on f's periodic grid.
Propagated free_propagate(const SampledField& f, double t);

/// phi_lambda^{(t)} = U0(t) phi_lambda. The closed form is exact for every
/// Hermite base; `sampled` is the FFT route for cross-checking.
struct EvolvedWindow {
  WindowFamily family;
  double lambda;
  double t;
  AnalyticWindow closed_form;

  Window window() const { return closed_form; }
};

EvolvedWindow evolved_window(const WindowFamily& w, double lambda, double t);

/// phi_lambda sampled on g and pushed through free_propagate.
Propagated evolved_window_sampled(const WindowFamily& w, double lambda, double t, const Grid1D& g);

/// Strang splitting for i u_t + u_xx / 2 - V u = 0 from t_start to t_end:
/// half kinetic step, potential phase exp(-i V(s_mid, x) dt), half kinetic step.
/// Adjacent kinetic half steps are fused.
Propagated split_step_evolve(const SampledField& u, const PotentialModel& v, double t_start,
                             double t_end, int n_steps);

inline Propagated split_step_evolve(const SampledField& u0, const PotentialModel& v, double t,
                                    int n_steps) {
  return split_step_evolve(u0, v, 0.0, t, n_steps);
}

struct AssumptionOrder {
  int order;
  /// sup of |d^k V| / (1 + |x|)^{rho - k} over the samples.
  double sup_ratio;
  double argmax_x;
  double argmax_t;
  bool pass;
};

struct AssumptionReport {
  std::string potential;
  double rho;
  double bound_constant;
  double x_lo, x_hi, t_lo, t_hi;
  int x_samples;
  int t_samples;
  std::vector<AssumptionOrder> orders;

  bool pass() const;
};

/// Dense-sample check of |d^k V(t, x)| <= C (1 + |x|)^{rho - k} for k = 0..max_order.
/// Throws CapabilityError when V cannot supply order max_order.
AssumptionReport validate_assumption(const PotentialModel& v, double x_lo, double x_hi,
                                     double t_lo, double t_hi, int max_order,
                                     int x_samples = 4001, int t_samples = 9);

}  // namespace wptk
