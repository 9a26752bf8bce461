// Copyright 2026 The Olastream Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "olastream/fft.hpp"

#include <cmath>
#include <numbers>

#include "olastream/errors.hpp"

namespace olastream {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

FftPlan::FftPlan(int dft_size) : n_(dft_size), half_(dft_size / 2) {
  if (n_ < 2 || (n_ & (n_ - 1)) != 0)
    throw ConfigError("fft: size must be a power of two >= 2");

  bitrev_.assign(half_, 0);
  int j = 0;
  for (int i = 0; i < half_; ++i) {
    bitrev_[i] = j;
    int k = half_ / 2;
    while (k >= 1 && j >= k) {
      j -= k;
      k /= 2;
    }
    j += k;
  }

  twiddle_.resize(std::max(half_ / 2, 1));
  for (int k = 0; k < half_ / 2; ++k)
    twiddle_[k] = std::polar(1.0, -kTwoPi * k / half_);

  pack_.resize(half_);
  for (int k = 0; k < half_; ++k)
    pack_[k] = std::polar(1.0, -kTwoPi * k / n_);
}

void FftPlan::transform_half(std::complex<double>* data, bool inverse) const {
  const int n = half_;
  for (int i = 0; i < n; ++i) {
    const int r = bitrev_[i];
    if (i < r) std::swap(data[i], data[r]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    const int stride = n / len;
    const int m = len / 2;
    for (int base = 0; base < n; base += len) {
      for (int k = 0; k < m; ++k) {
        std::complex<double> w = twiddle_[k * stride];
        if (inverse) w = std::conj(w);
        const std::complex<double> u = data[base + k];
        const std::complex<double> v = data[base + k + m] * w;
        data[base + k] = u + v;
        data[base + k + m] = u - v;
      }
    }
  }
  if (inverse) {
    const double scale = 1.0 / n;
    for (int i = 0; i < n; ++i) data[i] *= scale;
  }
}

void FftPlan::forward_real(std::span<const double> input,
                           std::span<std::complex<double>> bins) const {
  if (static_cast<int>(input.size()) != n_)
    throw InputError("fft: forward_real input length mismatch");
  if (static_cast<int>(bins.size()) != num_bins())
    throw InputError("fft: forward_real bin count mismatch");

  // Pack adjacent sample pairs into one half-size complex transform.
  std::vector<std::complex<double>> z(half_);
  for (int i = 0; i < half_; ++i) z[i] = {input[2 * i], input[2 * i + 1]};
  transform_half(z.data(), false);

  bins[0] = {z[0].real() + z[0].imag(), 0.0};
  bins[half_] = {z[0].real() - z[0].imag(), 0.0};
  for (int k = 1; k <= half_ / 2; ++k) {
    const std::complex<double> a = z[k];
    const std::complex<double> b = std::conj(z[half_ - k]);
    const std::complex<double> even = 0.5 * (a + b);
    const std::complex<double> odd =
        std::complex<double>(0.0, -0.5) * (a - b);
    const std::complex<double> t = pack_[k] * odd;
    bins[k] = even + t;
    bins[half_ - k] = std::conj(even - t);
  }
}

void FftPlan::inverse_real(std::span<const std::complex<double>> bins,
                           std::span<double> output) const {
  if (static_cast<int>(bins.size()) != num_bins())
    throw InputError("fft: inverse_real bin count mismatch");
  if (static_cast<int>(output.size()) != n_)
    throw InputError("fft: inverse_real output length mismatch");

  std::vector<std::complex<double>> z(half_);
  // Only the real parts of bins 0 and n/2 participate.
  z[0] = {0.5 * (bins[0].real() + bins[half_].real()),
          0.5 * (bins[0].real() - bins[half_].real())};
  for (int k = 1; k < half_; ++k) {
    const std::complex<double> a = bins[k];
    const std::complex<double> b = std::conj(bins[half_ - k]);
    // Recover the even/odd sub-spectra, then re-pack them as one
    // half-size complex spectrum Z = E + i*O.
    const std::complex<double> even = 0.5 * (a + b);
    const std::complex<double> odd = 0.5 * std::conj(pack_[k]) * (a - b);
    z[k] = {even.real() - odd.imag(), even.imag() + odd.real()};
  }
  transform_half(z.data(), true);
  for (int i = 0; i < half_; ++i) {
    output[2 * i] = z[i].real();
    output[2 * i + 1] = z[i].imag();
  }
}

}  // namespace olastream
