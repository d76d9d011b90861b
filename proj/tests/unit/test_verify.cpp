#include <cmath>
#include <sstream>

#include "doctest.h"
#include "wptk/error.hpp"
#include "wptk/quadrature.hpp"
#include "wptk/schrodinger.hpp"
#include "wptk/verify.hpp"

using namespace wptk;

namespace {

std::vector<PhasePoint> probe_grid(int n, double r) {
  std::vector<PhasePoint> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.push_back({-r + 2 * r * i / (n - 1), -r + 2 * r * j / (n - 1)});
  }
  return out;
}

std::vector<double> powers_of_two(int lo, int hi) {
  std::vector<double> out;
  for (int k = lo; k <= hi; ++k) out.push_back(std::ldexp(1.0, k));
  return out;
}

}  // namespace

TEST_CASE("free identity") {
  const Grid1D g = make_grid(-32, 32, 4096);
  const SampledField u0 = sample_signal(signal::Gaussian{0, 1, 1}, g);
  const auto probes = probe_grid(8, 2);
  const IdentityReport r0 = verify_free_identity(u0, WindowFamily::gaussian(0.25), 1, 0.0, probes);
  CHECK(r0.max_rel_error <= 1e-12);
  for (const WindowFamily& w : {WindowFamily::gaussian(0.25), WindowFamily::hermite(2, 0.25)}) {
    CHECK(verify_free_identity(u0, w, 1, 1.0, probes).passes(1e-6));
    CHECK(verify_free_identity(u0, w, 16, 0.5, probes).passes(1e-6));
    CHECK(verify_free_identity(u0, w, 4, -0.25, probes).passes(1e-6));
  }
}

TEST_CASE("strict mode escalates warnings") {
  const Grid1D g = make_grid(-4, 4, 256);
  const SampledField u0 = sample_signal(signal::Gaussian{0, 1.5, 0}, g);
  const auto probes = probe_grid(3, 1);
  const IdentityReport loose = verify_free_identity(u0, WindowFamily::gaussian(0.25), 1, 1.0, probes);
  CHECK_FALSE(loose.warnings.empty());
  CHECK_FALSE(loose.strict_failure);
  CHECK(verify_free_identity(u0, WindowFamily::gaussian(0.25), 1, 1.0, probes, true).strict_failure);
}

TEST_CASE("remainder term vanishes for flat second derivatives") {
  const Grid1D g = make_grid(-32, 32, 4096);
  const SampledField u = sample_signal(signal::Gaussian{}, g);
  const WindowFamily w = WindowFamily::gaussian(0.25);
  CHECK(ru_quadrature(u, PotentialModel::zero(), w, 1, 0.5, {0.3, 1}) == cplx{});
  CHECK(ru_quadrature(u, PotentialModel::linear(2), w, 1, 0.5, {0.3, 1}) == cplx{});
}

TEST_CASE("remainder term against a refined double quadrature") {
  const Grid1D g = make_grid(-32, 32, 4096);
  const SampledField u = sample_signal(signal::Gaussian{0.2, 1, 0.5}, g);
  const WindowFamily w = WindowFamily::gaussian(0.25);
  const PotentialModel v = PotentialModel::subquad(1);
  const double lambda = 2, t = 0.3;
  const AnalyticWindow phi = evolved_window(w, lambda, t).closed_form;
  const Grid1D fine = make_grid(-32, 32, 16384);
  const SampledField uf = sample_signal(signal::Gaussian{0.2, 1, 0.5}, fine);
  const QuadratureRule th = gauss_legendre(48, 0, 1);
  for (const PhasePoint p : {PhasePoint{0.5, 1.0}, PhasePoint{-1, -0.5}}) {
    // same integral from scratch: V''(x + theta d)(1 - theta) d^2 with d = y - x
    cplx ref = 0;
    for (std::size_t k = 0; k < fine.size(); ++k) {
      const double y = fine.node(k), d = y - p.x;
      double m = 0;
      for (std::size_t q = 0; q < th.nodes.size(); ++q) {
        m += th.weights[q] * v.second(t, p.x + th.nodes[q] * d) * (1 - th.nodes[q]);
      }
      ref += std::conj(phi(d)) * m * d * d * uf[k] * std::polar(1.0, -p.xi * y);
    }
    ref *= fine.dx();
    const cplx got = ru_quadrature(u, v, w, lambda, t, p);
    CHECK(std::abs(got - ref) <= 1e-6 * std::abs(ref));
  }
}

TEST_CASE("flow identity") {
  const Grid1D g = make_grid(-32, 32, 4096);
  const SampledField u0 = sample_signal(signal::Gaussian{}, g);
  const WindowFamily w = WindowFamily::gaussian(0.25);
  const auto probes = probe_grid(4, 1);
  const auto at0 = verify_flow_identity(u0, PotentialModel::linear(1), w, 4, 0.0, probes);
  CHECK(at0.comparison.max_rel_error <= 1e-12);
  CHECK(verify_flow_identity(u0, PotentialModel::zero(), w, 4, 0.5, probes).comparison.passes(1e-6));
  for (double lambda : {1.0, 16.0}) {
    CHECK(verify_flow_identity(u0, PotentialModel::linear(1), w, lambda, 0.5, probes).comparison.passes(1e-5));
  }
  CHECK_THROWS_AS(verify_flow_identity(u0, PotentialModel::subquad(1), w, 1, 0.5, probes), ModeError);
}

TEST_CASE("flow identity bound mode reports a remainder scale") {
  const Grid1D g = make_grid(-32, 32, 4096);
  const SampledField u0 = sample_signal(signal::Gaussian{}, g);
  const std::vector<PhasePoint> probes{{0, 0.5}, {0.5, 1}, {-0.5, -1}};
  const auto r = verify_flow_identity(u0, PotentialModel::subquad(1), WindowFamily::gaussian(0.25), 1, 0.5,
                                      probes, FlowIdentityMode::Bound);
  CHECK(r.mode == FlowIdentityMode::Bound);
  CHECK(r.ru_scale > 0.0);
  CHECK(r.comparison.max_abs_error > 0.0);
  CHECK(r.comparison.max_abs_error <= 2 * r.ru_scale);
}

TEST_CASE("transformed equation residual shrinks under refinement") {
  const Grid1D g = make_grid(-32, 32, 4096);
  const SampledField u0 = sample_signal(signal::Gaussian{}, g);
  const WindowFamily w = WindowFamily::gaussian(0.25);
  ResidualOptions opt;
  opt.nx = opt.nxi = 3;
  for (const PotentialModel& v : {PotentialModel::linear(1), PotentialModel::subquad(1)}) {
    const double coarse = pde_residual(u0, v, w, 1, 0.5, 0.1, opt).l2_norm;
    const double fine = pde_residual(u0, v, w, 1, 0.5, 0.05, opt).l2_norm;
    CHECK(coarse / fine >= 3.5);
  }
  opt.stencil_order = 3;
  CHECK_THROWS_AS(pde_residual(u0, PotentialModel::zero(), w, 1, 0.5, 0.1, opt), ConfigurationError);
}

TEST_CASE("residual rejects unresolved bands") {
  const Grid1D g = make_grid(-8, 8, 64);
  const SampledField u0 = sample_signal(signal::Gaussian{}, g);
  ResidualOptions opt;
  opt.xi_lo = -20;
  opt.xi_hi = 20;
  CHECK_THROWS_AS(pde_residual(u0, PotentialModel::zero(), WindowFamily::gaussian(0.25), 1, 0.5, 0.1, opt),
                  ResolutionError);
}

TEST_CASE("round trip on a small matrix") {
  RoundtripOptions opt;
  opt.grid = make_grid(-64, 64, 1 << 16);
  opt.region.x0 = {-2, 0, 2};
  opt.region.half_width = 0.25;
  const WindowFamily w = WindowFamily::gaussian(0.25);
  const auto lambdas = powers_of_two(3, 8);

  const RoundtripReport g = theorem_roundtrip(signal::Gaussian{}, PotentialModel::zero(), w, 0.5, lambdas, {}, opt);
  CHECK(g.disagreements() == 0);
  for (const auto& row : g.rows) {
    CHECK(row.static_side.verdict == Verdict::Regular);
    CHECK(row.flowed_side.verdict == Verdict::Regular);
  }

  const RoundtripReport h = theorem_roundtrip(signal::Heaviside{}, PotentialModel::zero(), w, 0.0, lambdas, {}, opt);
  CHECK(h.disagreements() == 0);
  for (const auto& row : h.rows) {
    const Verdict expect = row.x0 == 0.0 ? Verdict::InWavefront : Verdict::Regular;
    CHECK(row.static_side.verdict == expect);
    CHECK(row.flowed_side.verdict == expect);
  }

  const RoundtripReport d = theorem_roundtrip(signal::Dirac{}, PotentialModel::linear(1), w, 0.5, lambdas, {}, opt);
  CHECK(d.disagreements() == 0);
  REQUIRE(d.mollifier_width);
  CHECK(*d.mollifier_width == doctest::Approx(4 * opt.grid.dx()));
}

TEST_CASE("summary lines") {
  std::ostringstream os;
  write_summary(os, {{"free_identity", "max_rel_err", 3.5e-15, 1e-6, true}, {"x", "y", 2.0, 1.0, false}});
  CHECK(os.str() == "free_identity max_rel_err 3.500000e-15 PASS\nx y 2.000000e+00 FAIL\n");
}
