// Copyright 2026 The Olastream Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)
//
// O(N^2) reference DFT, independent of the library's FFT path so the fast
// transform can be checked against it.

#pragma once

#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace oracle {

// X[k] = sum_n x[n] exp(-2*pi*i*k*n/N) for k = 0..N/2.
inline std::vector<std::complex<double>> naive_rdft(
    std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  std::vector<std::complex<double>> bins(n / 2 + 1);
  for (int k = 0; k <= n / 2; ++k) {
    std::complex<double> acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double phase = -2.0 * std::numbers::pi * k * i / n;
      acc += x[i] * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    bins[k] = acc;
  }
  return bins;
}

// Inverse via the conjugate-symmetric extension of the half spectrum.
inline std::vector<double> naive_irdft(
    std::span<const std::complex<double>> bins, int n) {
  std::vector<std::complex<double>> full(n);
  for (int k = 0; k <= n / 2; ++k) full[k] = bins[k];
  for (int k = n / 2 + 1; k < n; ++k) full[k] = std::conj(bins[n - k]);
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) {
    std::complex<double> acc = 0.0;
    for (int k = 0; k < n; ++k) {
      const double phase = 2.0 * std::numbers::pi * k * i / n;
      acc += full[k] * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    x[i] = acc.real() / n;
  }
  return x;
}

}  // namespace oracle
