#pragma once

#include <span>
#include <string>
#include <vector>

#include "wptk/field.hpp"
#include "wptk/signal.hpp"
#include "wptk/window.hpp"

namespace wptk {

struct PhasePoint {
  double x = 0.0;
  double xi = 0.0;
};

/// Transform values plus any decay-violation warnings raised on the way.
struct TransformResult {
  std::vector<cplx> values;
  std::vector<std::string> warnings;
};

/// W_phi f(x, xi) = int conj(phi(y - x)) f(y) e^{-i y xi} dy by the trapezoid
/// rule on f's grid, at each requested point.
TransformResult wpt_direct(const Window& phi, const SampledField& f,
                           std::span<const PhasePoint> points);

/// Transform over x_axis x xi_axis; values are row-major, one row per x.
struct WptSlice {
  Grid1D signal_grid;
  UniformAxis x_axis;
  FrequencyGrid xi_axis;
  std::vector<cplx> values;
  std::vector<std::string> warnings;

  cplx at(std::size_t ix, std::size_t jxi) const { return values[ix * xi_axis.count + jxi]; }
};

/// Same quadrature as wpt_direct, batched: one FFT of conj(phi(. - x)) f per row.
/// xi_axis must be a block of the DFT-dual frequencies of f's grid.
WptSlice wpt_slice(const Window& phi, const SampledField& f, const UniformAxis& x_axis,
                   const FrequencyGrid& xi_axis);

/// Reconstructs f from its slice:
///   f(x) = (2 pi ||phi||^2)^{-1} int int W(y, xi) phi(x - y) e^{i x xi} dxi dy.
/// Throws ResolutionError when the slice's frequency (or position) range cuts
/// off a non-negligible part of the transform.
SampledField wpt_inverse(const WptSlice& slice, const Window& phi);

/// Exact W_phi(signal)(p) for pairs with a closed form: dirac against any
/// analytic window; gaussian and plane_wave against order-0 (Gaussian family)
/// windows, evolved or not. Other pairs throw UnsupportedError.
cplx wpt_analytic_oracle(const SignalDescriptor& signal, const AnalyticWindow& window,
                         const PhasePoint& p);

/// Oracle with phi_lambda built from the family.
cplx wpt_analytic_oracle(const SignalDescriptor& signal, const WindowFamily& family, double lambda,
                         const PhasePoint& p);

/// True when wpt_analytic_oracle accepts the pair.
bool has_closed_form(const SignalDescriptor& signal, const AnalyticWindow& window);

/// Writes the slice as a CSV matrix: header `x,<xi_0>,<xi_1>,...`, one row per x.
/// Modulus by default; with `complex_values` each cell becomes `re,im` columns.
void write_slice_csv(std::ostream& os, const WptSlice& slice, bool complex_values = false);

}  // namespace wptk
