#include "wptk/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <vector>

#include "wptk/error.hpp"

namespace wptk {

namespace {

// The FFTW planner is not re-entrant; execution of finished plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

struct Fft::Plans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;

  Plans() = default;
  Plans(const Plans&) = delete;
  Plans& operator=(const Plans&) = delete;
  ~Plans() {
    std::lock_guard lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
  }
};

Fft::Fft(std::size_t n) : n_(n), plans_(std::make_unique<Plans>()) {
  if (n == 0) throw ConfigurationError("fft: zero length");
  std::vector<std::complex<double>> scratch(n);
  const int len = static_cast<int>(n);
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  std::lock_guard lock(planner_mutex());
  plans_->forward = fftw_plan_dft_1d(len, as_fftw(scratch.data()), as_fftw(scratch.data()),
                                     FFTW_FORWARD, flags);
  plans_->backward = fftw_plan_dft_1d(len, as_fftw(scratch.data()), as_fftw(scratch.data()),
                                      FFTW_BACKWARD, flags);
  if (plans_->forward == nullptr || plans_->backward == nullptr) {
    throw Error("fft: FFTW failed to build a plan");
  }
}

Fft::~Fft() = default;

Fft::Fft(Fft&&) noexcept = default;
Fft& Fft::operator=(Fft&&) noexcept = default;

void Fft::forward(std::span<std::complex<double>> data) const {
  if (data.size() != n_) throw ShapeError("fft: length mismatch");
  fftw_execute_dft(plans_->forward, as_fftw(data.data()), as_fftw(data.data()));
}

void Fft::inverse(std::span<std::complex<double>> data) const {
  if (data.size() != n_) throw ShapeError("fft: length mismatch");
  fftw_execute_dft(plans_->backward, as_fftw(data.data()), as_fftw(data.data()));
  const double scale = 1.0 / static_cast<double>(n_);
  for (auto& v : data) v *= scale;
}

}  // namespace wptk
