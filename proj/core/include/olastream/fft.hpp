// Copyright 2026 The Olastream Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <complex>
#include <span>
#include <vector>

namespace olastream {

// Radix-2 real-input FFT for a fixed power-of-two size.
//
// The plan holds the bit-reversal and twiddle tables and is immutable after
// construction, so one plan can be shared across threads. forward_real /
// inverse_real run the half-size complex transform plus the usual
// pack/unpack stage; the forward transform is the plain unnormalized DFT
// sum and the inverse carries the 1/N factor.
class FftPlan {
 public:
  explicit FftPlan(int dft_size);

  int size() const { return n_; }
  int num_bins() const { return n_ / 2 + 1; }

  // input: n real samples; bins: n/2+1 complex values. Bins 0 and n/2 have
  // exactly zero imaginary part.
  void forward_real(std::span<const double> input,
                    std::span<std::complex<double>> bins) const;

  // bins: n/2+1 complex values interpreted conjugate-symmetrically (only
  // the real parts of bins 0 and n/2 are used); output: n real samples.
  void inverse_real(std::span<const std::complex<double>> bins,
                    std::span<double> output) const;

 private:
  // In-place complex transform of size n_/2 over `data`.
  void transform_half(std::complex<double>* data, bool inverse) const;

  int n_;
  int half_;
  std::vector<int> bitrev_;                       // size n_/2
  std::vector<std::complex<double>> twiddle_;     // e^{-2pi i k/(n/2)}, k < n/4
  std::vector<std::complex<double>> pack_;        // e^{-2pi i k/n}, k <= n/4
};

}  // namespace olastream
