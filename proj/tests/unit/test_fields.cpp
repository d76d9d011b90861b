#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "wptk/error.hpp"
#include "wptk/fft.hpp"
#include "wptk/signal.hpp"
#include "wptk/window.hpp"

using namespace wptk;

namespace {
const double kPiQuarter = std::pow(std::numbers::pi, -0.25);
}

TEST_CASE("grid spacing and nodes") {
  const Grid1D g = make_grid(-32, 32, 4096);
  CHECK(g.dx() == doctest::Approx(1.0 / 64).epsilon(1e-15));
  const Grid1D u = make_grid(0, 1, 16);
  for (std::size_t k = 0; k < 16; ++k) CHECK(u.node(k) == doctest::Approx(k / 16.0));
  CHECK(u.nyquist() == doctest::Approx(16 * std::numbers::pi));
}

TEST_CASE("grid rejects bad shapes") {
  CHECK_THROWS_AS(make_grid(-32, 32, 1000), ConfigurationError);
  CHECK_THROWS_AS(make_grid(1, 1, 1024), ConfigurationError);
  CHECK_THROWS_AS(make_grid(0, 1, 8), ConfigurationError);
}

TEST_CASE("dual frequency grid covers the requested band") {
  const Grid1D g = make_grid(-8, 8, 256);
  const FrequencyGrid f = dual_frequency_grid(g, -3, 3);
  CHECK(f.step == doctest::Approx(2 * std::numbers::pi / 16));
  CHECK(f.start >= -3.0);
  CHECK(f.last() <= 3.0);
  CHECK(f.start - f.step < -3.0);
  const FrequencyGrid full = full_dual_frequency_grid(g);
  CHECK(full.count == 256);
}

TEST_CASE("fft round trip") {
  Fft fft(64);
  std::vector<cplx> x(64), y;
  for (std::size_t k = 0; k < 64; ++k) x[k] = {std::sin(0.3 * k), std::cos(1.7 * k)};
  y = x;
  fft.forward(y);
  fft.inverse(y);
  for (std::size_t k = 0; k < 64; ++k) CHECK(std::abs(y[k] - x[k]) < 1e-14);
  std::vector<cplx> wrong(32);
  CHECK_THROWS_AS(fft.forward(wrong), ShapeError);
}

TEST_CASE("gaussian sample at the origin") {
  const Grid1D g = make_grid(-32, 32, 4096);
  const SampledField f = sample_signal(signal::Gaussian{}, g);
  CHECK(std::abs(f[2048]) == doctest::Approx(kPiQuarter).epsilon(1e-14));
  CHECK(f.l2_norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f.boundary_clean());
}

TEST_CASE("plane wave and heaviside samples") {
  const Grid1D g = make_grid(-4, 4, 64);
  const SampledField p = sample_signal(signal::PlaneWave{2.0}, g);
  for (std::size_t k = 0; k < g.size(); ++k) {
    CHECK(std::abs(p[k]) == doctest::Approx(1.0));
    CHECK(std::abs(p[k] - std::polar(1.0, 2 * g.node(k))) < 1e-14);
  }
  const SampledField h = sample_signal(signal::Heaviside{0.0}, g);
  for (std::size_t k = 0; k < g.size(); ++k) CHECK(h[k].real() == (g.node(k) >= 0 ? 1.0 : 0.0));
  CHECK_FALSE(h.boundary_clean());
}

TEST_CASE("descriptor preconditions") {
  const Grid1D g = make_grid(-4, 4, 64);
  CHECK_THROWS_AS(sample_signal(signal::Dirac{0.0}, g), UnsupportedError);
  CHECK_THROWS_AS(sample_signal(signal::Heaviside{4.0}, g), DomainError);
  CHECK_THROWS_AS(validate(signal::Gaussian{0, -1, 0}), ConfigurationError);
  CHECK_THROWS_AS(validate(signal::Cusp{0, 2.5, 0}), ConfigurationError);
}

TEST_CASE("mollified dirac has unit mass") {
  const Grid1D g = make_grid(-4, 4, 4096);
  const SampledField m = sample_mollified_dirac(0.5, 8 * g.dx(), g);
  cplx mass = 0;
  for (std::size_t k = 0; k < g.size(); ++k) mass += m[k];
  CHECK(std::abs(mass * g.dx() - 1.0) < 1e-12);
}

TEST_CASE("scaled window at lambda 1 is the base") {
  const Grid1D g = make_grid(-16, 16, 1024);
  for (const WindowFamily& w : {WindowFamily::gaussian(0.25), WindowFamily::hermite(3, 0.25)}) {
    const SampledField s = scaled_window(w, 1.0, g);
    for (std::size_t k = 0; k < g.size(); k += 7) {
      CHECK(std::abs(s[k] - w.base_value(g.node(k))) < 1e-15);
    }
  }
}

TEST_CASE("scaled gaussian peak") {
  const Grid1D g = make_grid(-32, 32, 4096);
  const SampledField s = scaled_window(WindowFamily::gaussian(0.25), 16.0, g);
  CHECK(std::abs(s[2048]) == doctest::Approx(std::pow(16.0, 0.125) * kPiQuarter).epsilon(1e-14));
  CHECK(std::abs(s[2048]) == doctest::Approx(1.06224).epsilon(1e-5));
  CHECK_THROWS_AS(scaled_window(WindowFamily::gaussian(0.25), 0.5, g), DomainError);
}

TEST_CASE("scaling preserves the L2 norm") {
  const Grid1D g = make_grid(-32, 32, 4096);
  for (int order : {0, 1, 4}) {
    const WindowFamily w = WindowFamily::hermite(order, 0.25);
    for (double lambda : {1.0, 4.0, 16.0, 256.0}) {
      const SampledField s = scaled_window(w, lambda, g);
      CHECK(std::abs(s.l2_norm() - 1.0) <= 1e-8);
    }
  }
}

TEST_CASE("trapezoid norms are converged under refinement") {
  const signal::Gaussian d{0.3, 1.2, 2.0};
  const double coarse = sample_signal(d, make_grid(-32, 32, 2048)).l2_norm();
  const double fine = sample_signal(d, make_grid(-32, 32, 4096)).l2_norm();
  CHECK(std::abs(coarse - fine) <= 1e-10 * fine);
}

TEST_CASE("hermite polynomials") {
  CHECK(hermite_polynomial(0, 0.7) == 1.0);
  CHECK(hermite_polynomial(1, 0.7) == doctest::Approx(1.4));
  CHECK(hermite_polynomial(3, 0.7) == doctest::Approx(8 * 0.343 - 12 * 0.7));
  CHECK(hermite_polynomial(4, 1.5) == doctest::Approx(16 * 5.0625 - 48 * 2.25 + 12));
}

TEST_CASE("analytic and sampled windows shift alike") {
  const Grid1D g = make_grid(-16, 16, 2048);
  const AnalyticWindow a = AnalyticWindow::scaled(WindowFamily::hermite(2, 0.25), 4.0);
  const Window wa(a);
  const Window ws(sample_window(a, g));
  std::vector<cplx> oa, os;
  std::size_t fa, la, fs, ls;
  wa.shifted(g, 1.3, oa, &fa, &la);
  ws.shifted(g, 1.3, os, &fs, &ls);
  double err = 0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const cplx va = (k >= fa && k < la) ? oa[k] : cplx{};
    const cplx vs = (k >= fs && k < ls) ? os[k] : cplx{};
    err = std::max(err, std::abs(va - vs));
  }
  CHECK(err < 1e-10);
}

TEST_CASE("field csv round trip") {
  const Grid1D g = make_grid(-2, 2, 16);
  const SampledField f = sample_signal(signal::Gaussian{0.1, 0.7, 1.5}, g);
  std::stringstream ss;
  write_field_csv(ss, f);
  const SampledField r = read_field_csv(ss);
  CHECK(r.grid().size() == 16);
  for (std::size_t k = 0; k < 16; ++k) CHECK(r[k] == f[k]);
}

TEST_CASE("field arithmetic rejects grid mismatch") {
  SampledField a(make_grid(0, 1, 16));
  const SampledField b(make_grid(0, 2, 16));
  CHECK_THROWS_AS(a += b, ShapeError);
}
