#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>

namespace wptk {

/// Length-n complex DFT backed by FFTW. forward() is unnormalized with the
/// e^{-2 pi i j m / n} kernel; inverse() carries the 1/n factor so that
/// inverse(forward(x)) == x. Plans are immutable once built; one Fft may be
/// used from several threads at once.
class Fft {
 public:
  explicit Fft(std::size_t n);
  ~Fft();
  Fft(Fft&&) noexcept;
  Fft& operator=(Fft&&) noexcept;
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  std::size_t size() const { return n_; }
  void forward(std::span<std::complex<double>> data) const;
  void inverse(std::span<std::complex<double>> data) const;

 private:
  struct Plans;
  std::size_t n_;
  std::unique_ptr<Plans> plans_;
};

}  // namespace wptk
