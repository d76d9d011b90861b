#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wptk/field.hpp"
#include "wptk/potential.hpp"
#include "wptk/signal.hpp"
#include "wptk/window.hpp"
#include "wptk/wpt.hpp"

namespace wptk {

/// K x Gamma in one dimension: an x-interval, a set of directions (+1 and/or
/// -1) and the radial band |xi| in [1/a, a].
struct ConicNeighborhood {
  double k_lo = 0.0;
  double k_hi = 0.0;
  std::vector<int> directions{1};
  double a = 2.0;
  int x_samples = 5;
  int xi_samples = 5;

  /// Throws ConfigurationError when an invariant fails.
  void validate() const;
  /// x-major, then direction, then |xi| ascending.
  std::vector<PhasePoint> samples() const;
};

ConicNeighborhood neighborhood_around(double x0, int direction, double half_width, double a = 2.0,
                                      int x_samples = 5, int xi_samples = 5);

struct SlopeFit {
  double slope = 0.0;
  /// Fewer than three magnitudes on the fitting range rise above the floor.
  bool numerically_zero = false;
};

inline constexpr double kMagnitudeFloor = 1e-300;

/// Least-squares slope of log(magnitude) against log(lambda) over the upper half
/// of the list (indices n/2 .. n-1), ignoring magnitudes at or below `floor`.
SlopeFit fit_decay_slope(const std::vector<double>& lambdas, const std::vector<double>& magnitudes,
                         double floor = kMagnitudeFloor);

struct WindowDecay {
  std::string window;
  std::vector<double> sup_magnitudes;
  SlopeFit fit;
  /// Magnitudes at or below this were treated as zero.
  double floor = kMagnitudeFloor;
  /// "oracle" or "sampled".
  std::string route;
};

struct DecayReport {
  PhasePoint candidate;
  std::vector<double> lambdas;
  /// The first entry belongs to the primary window.
  std::vector<WindowDecay> per_window;
  std::vector<std::string> warnings;

  const std::vector<double>& sup_magnitudes() const { return per_window.front().sup_magnitudes; }
  double slope() const { return per_window.front().fit.slope; }
  bool numerically_zero() const { return per_window.front().fit.numerically_zero; }
};

enum class Verdict { Regular, InWavefront, Inconclusive };
std::string to_string(Verdict v);

struct Thresholds {
  double regular = -2.5;
  double wavefront = -1.0;
};

struct Classification {
  Verdict verdict = Verdict::Inconclusive;
  double slope = 0.0;
  bool numerically_zero = false;
  Thresholds thresholds;
};

Classification classify(const SlopeFit& fit, const Thresholds& th = {});
/// Classifies by the primary window.
Classification classify(const DecayReport& report, const Thresholds& th = {});

/// Either an analytic descriptor or a sampled field.
using ProbeSignal = std::variant<SignalDescriptor, SampledField>;

struct ProbeOptions {
  /// Descriptors without a closed form for some window are sampled here.
  std::optional<Grid1D> sampling_grid;
  /// Sampled-route magnitudes at or below noise_floor * ||f||_2 * ||phi0|| count as zero.
  double noise_floor = 1e-12;
  /// RK4 steps per trajectory in flowed probes.
  int flow_steps = 256;
};

/// Largest lambda for which a sampled probe on g resolves both the window
/// (lambda^{-b} >= 4 dx) and the probed band (lambda max|xi| + 6 lambda^b <= pi / (2 dx)).
double max_admissible_lambda(const Grid1D& g, double b, double max_abs_xi);

/// sup over the neighborhood of |W_{phi_lambda} f(x, lambda xi)| for each lambda,
/// once per window; `windows` must be non-empty and the first is primary.
DecayReport static_decay_probe(const ProbeSignal& f, const std::vector<WindowFamily>& windows,
                               const ConicNeighborhood& nb, const std::vector<double>& lambdas,
                               const ProbeOptions& opt = {});

/// Flowed variant: for each sample, (x0, xi0) = flow of (x, lambda xi) from s = t
/// back to 0, evaluated as |W_{phi_lambda^{(-t)}} u0(x0, xi0)|.
DecayReport flowed_decay_probe(const ProbeSignal& u0, const PotentialModel& v,
                               const std::vector<WindowFamily>& windows, double t,
                               const ConicNeighborhood& nb, const std::vector<double>& lambdas,
                               const ProbeOptions& opt = {});

struct CandidateResult {
  double x0;
  int direction;
  DecayReport report;
  Classification classification;
  /// One per window, same order as report.per_window.
  std::vector<Classification> per_window;
  /// All non-Inconclusive window verdicts agree.
  bool windows_agree = true;
};

struct DetectionRegion {
  std::vector<double> x0;
  std::vector<int> directions{-1, 1};
  /// Neighborhood half-width; defaults to a quarter of the candidate spacing.
  std::optional<double> half_width;
  double a = 2.0;
  int x_samples = 5;
  int xi_samples = 5;
};

/// Explicit half-width, else a quarter of the smallest candidate spacing, else 0.25.
double candidate_half_width(const DetectionRegion& region);

std::vector<CandidateResult> detect_wavefront_grid(const ProbeSignal& f,
                                                   const std::vector<WindowFamily>& windows,
                                                   const DetectionRegion& region,
                                                   const std::vector<double>& lambdas,
                                                   const Thresholds& th = {},
                                                   const ProbeOptions& opt = {});

void write_classification_csv(std::ostream& os, const std::vector<CandidateResult>& results);
void write_decay_csv(std::ostream& os, const DecayReport& report);

}  // namespace wptk
