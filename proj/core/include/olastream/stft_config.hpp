// Copyright 2026 The Olastream Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstdint>

#include "olastream/errors.hpp"

namespace olastream {

// Frame geometry of the analysis/synthesis chain.
//
// Invariants (checked at construction):
//   - window % hop == 0; the overlap factor C = window/hop is derived.
//   - dft >= window (frames are zero-padded from window to dft) and dft is
//     a power of two.
class StftConfig {
 public:
  StftConfig(int window_size, int hop_size, int dft_size, int sample_rate)
      : window_size_(window_size),
        hop_size_(hop_size),
        dft_size_(dft_size),
        sample_rate_(sample_rate) {
    if (window_size <= 0 || hop_size <= 0 || dft_size <= 0 || sample_rate <= 0)
      throw ConfigError("stft config: all sizes must be positive");
    if (window_size % hop_size != 0)
      throw ConfigError("stft config: window size must be a multiple of the hop size");
    if (dft_size < window_size)
      throw ConfigError("stft config: dft size must be >= window size");
    if ((dft_size & (dft_size - 1)) != 0)
      throw ConfigError("stft config: dft size must be a power of two");
  }

  int window_size() const { return window_size_; }
  int hop_size() const { return hop_size_; }
  int dft_size() const { return dft_size_; }
  int sample_rate() const { return sample_rate_; }

  // Number of frames overlapping each sample, C = W/H.
  int num_overlap() const { return window_size_ / hop_size_; }
  // Bins of a real-signal spectrum, F = N/2 + 1.
  int num_bins() const { return dft_size_ / 2 + 1; }

  friend bool operator==(const StftConfig&, const StftConfig&) = default;

 private:
  int window_size_;
  int hop_size_;
  int dft_size_;
  int sample_rate_;
};

// Smallest power of two >= window_size. 512-sample windows map to a
// 512-point DFT and 320-sample windows to 512 as well, so both share the
// same bin count.
inline int dft_size_for_window(int window_size) {
  int n = 1;
  while (n < window_size) n <<= 1;
  return n;
}

}  // namespace olastream
