// Copyright 2026 The Olastream Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "olastream/fft.hpp"
#include "olastream/stft_config.hpp"

namespace olastream {

// One frequency frame: F = N/2 + 1 complex bins of a real-signal spectrum.
struct ComplexFrame {
  std::vector<std::complex<double>> bins;

  ComplexFrame() = default;
  explicit ComplexFrame(int num_bins) : bins(num_bins) {}

  int num_bins() const { return static_cast<int>(bins.size()); }
  bool is_zero() const;
  bool is_finite() const;
};

// Time-ordered frequency frames sharing one geometry.
struct Spectrogram {
  std::vector<ComplexFrame> frames;
  StftConfig config;

  int num_frames() const { return static_cast<int>(frames.size()); }
};

// Windows W samples with g, zero-pads to the plan size and transforms.
ComplexFrame forward_frame(std::span<const double> samples,
                           std::span<const double> window,
                           const FftPlan& plan);

// Inverse transform truncated to the first window_size samples.
std::vector<double> inverse_frame(const ComplexFrame& frame,
                                  const FftPlan& plan, int window_size);

// Frames indexed by the streaming convention: the signal is preceded by
// W-H implicit zeros, frame t covers padded samples [t*H, t*H+W), and
// enough trailing zeros are assumed that every real sample is covered by
// exactly C frames. A signal of length len therefore produces
// (len-1)/H + C frames (0 for an empty signal).
int64_t frame_count_for(int64_t signal_length, const StftConfig& config);

// Offline analysis with the streaming frame convention.
Spectrogram stft(std::span<const double> signal,
                 std::span<const double> analysis_window,
                 const StftConfig& config);

struct WindowPair;

// Textbook synthesis: overlap-add of synthesis-windowed inverse frames,
// trimmed back to signal_length samples. With a Regular pair this inverts
// stft() up to rounding.
std::vector<double> istft(const Spectrogram& spectrogram,
                          const WindowPair& pair, int64_t signal_length);

}  // namespace olastream
