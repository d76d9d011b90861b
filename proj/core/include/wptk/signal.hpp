#pragma once

#include <string>
#include <variant>

#include "wptk/field.hpp"

namespace wptk::signal {

/// (pi w^2)^{-1/4} exp(-(x-c)^2 / (2 w^2)) exp(i p x); unit L2 norm.
struct Gaussian {
  double center = 0.0;
  double width = 1.0;
  double momentum = 0.0;
};

/// exp(i xi0 x).
struct PlaneWave {
  double xi0 = 0.0;
};

/// 1 for x >= jump, 0 otherwise.
struct Heaviside {
  double jump = 0.0;
};

/// |x-c|^alpha exp(-(x-c)^2/2) exp(i xi0 x); alpha in (0, 2). The Gaussian
/// envelope keeps the sample L2 and boundary-clean without moving the singularity.
struct Cusp {
  double center = 0.0;
  double alpha = 0.5;
  double xi0 = 0.0;
};

/// Point mass at `center`. Analytic only: never sampled.
struct Dirac {
  double center = 0.0;
};

}  // namespace wptk::signal

namespace wptk {

using SignalDescriptor =
    std::variant<signal::Gaussian, signal::PlaneWave, signal::Heaviside, signal::Cusp, signal::Dirac>;

/// Throws ConfigurationError when the descriptor's invariants fail.
void validate(const SignalDescriptor& d);

std::string describe(const SignalDescriptor& d);

/// Pointwise value; throws UnsupportedError for Dirac.
cplx evaluate(const SignalDescriptor& d, double x);

/// Samples the descriptor on every node of `g`.
/// Throws UnsupportedError for Dirac and DomainError when a Heaviside/Cusp
/// singular point is not strictly inside the grid.
SampledField sample_signal(const SignalDescriptor& d, const Grid1D& g);

/// Unit-mass Gaussian of standard deviation `width`: the sampled stand-in for
/// a point mass at `center`.
SampledField sample_mollified_dirac(double center, double width, const Grid1D& g);

}  // namespace wptk
