// Copyright 2026 The Olastream Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "olastream/fft.hpp"

namespace testutil {

// Welch PSD: hann-windowed segments, 50% overlap. Returns nfft/2+1 values.
inline std::vector<double> welch_psd(std::span<const double> x, int nfft) {
  olastream::FftPlan plan(nfft);
  std::vector<double> win(nfft);
  for (int i = 0; i < nfft; ++i)
    win[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / nfft);

  std::vector<double> psd(nfft / 2 + 1, 0.0);
  std::vector<double> seg(nfft);
  std::vector<std::complex<double>> bins(nfft / 2 + 1);
  int count = 0;
  for (size_t start = 0; start + nfft <= x.size(); start += nfft / 2) {
    for (int i = 0; i < nfft; ++i) seg[i] = win[i] * x[start + i];
    plan.forward_real(seg, bins);
    for (size_t k = 0; k < psd.size(); ++k) psd[k] += std::norm(bins[k]);
    ++count;
  }
  if (count > 0)
    for (double& v : psd) v /= count;
  return psd;
}

// Least-squares slope of 10*log10(psd) against log2(frequency) over
// [f_lo, f_hi]; the result is in dB per octave.
inline double psd_slope_db_per_octave(const std::vector<double>& psd,
                                      int sample_rate, int nfft, double f_lo,
                                      double f_hi) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (size_t k = 1; k < psd.size(); ++k) {
    const double f = static_cast<double>(k) * sample_rate / nfft;
    if (f < f_lo || f > f_hi || psd[k] <= 0.0) continue;
    const double lx = std::log2(f);
    const double ly = 10.0 * std::log10(psd[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace testutil
