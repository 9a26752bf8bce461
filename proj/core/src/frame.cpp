// Copyright 2026 The Olastream Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "olastream/frame.hpp"

#include <cmath>

#include "olastream/errors.hpp"
#include "olastream/windows.hpp"

namespace olastream {

bool ComplexFrame::is_zero() const {
  for (const auto& b : bins)
    if (b.real() != 0.0 || b.imag() != 0.0) return false;
  return true;
}

bool ComplexFrame::is_finite() const {
  for (const auto& b : bins)
    if (!std::isfinite(b.real()) || !std::isfinite(b.imag())) return false;
  return true;
}

ComplexFrame forward_frame(std::span<const double> samples,
                           std::span<const double> window,
                           const FftPlan& plan) {
  if (samples.size() != window.size())
    throw InputError("forward_frame: frame length does not match the window");
  if (static_cast<int>(samples.size()) > plan.size())
    throw InputError("forward_frame: frame longer than the DFT size");

  std::vector<double> padded(plan.size(), 0.0);
  for (size_t n = 0; n < samples.size(); ++n)
    padded[n] = samples[n] * window[n];

  ComplexFrame frame(plan.num_bins());
  plan.forward_real(padded, frame.bins);
  return frame;
}

std::vector<double> inverse_frame(const ComplexFrame& frame,
                                  const FftPlan& plan, int window_size) {
  if (frame.num_bins() != plan.num_bins())
    throw InputError("inverse_frame: bin count does not match the DFT size");
  if (window_size > plan.size())
    throw InputError("inverse_frame: window longer than the DFT size");

  std::vector<double> full(plan.size());
  plan.inverse_real(frame.bins, full);
  full.resize(window_size);
  return full;
}

int64_t frame_count_for(int64_t signal_length, const StftConfig& config) {
  if (signal_length <= 0) return 0;
  return (signal_length - 1) / config.hop_size() + config.num_overlap();
}

Spectrogram stft(std::span<const double> signal,
                 std::span<const double> analysis_window,
                 const StftConfig& config) {
  const int w = config.window_size();
  const int h = config.hop_size();
  const int lead = w - h;
  if (static_cast<int>(analysis_window.size()) != w)
    throw InputError("stft: analysis window length does not match the config");

  FftPlan plan(config.dft_size());
  const int64_t num_frames = frame_count_for(signal.size(), config);

  Spectrogram spec{{}, config};
  spec.frames.reserve(num_frames);
  std::vector<double> frame(w);
  for (int64_t t = 0; t < num_frames; ++t) {
    for (int n = 0; n < w; ++n) {
      const int64_t idx = t * h + n - lead;  // position in the real signal
      frame[n] =
          (idx >= 0 && idx < static_cast<int64_t>(signal.size())) ? signal[idx]
                                                                  : 0.0;
    }
    spec.frames.push_back(forward_frame(frame, analysis_window, plan));
  }
  return spec;
}

std::vector<double> istft(const Spectrogram& spectrogram,
                          const WindowPair& pair, int64_t signal_length) {
  const StftConfig& config = spectrogram.config;
  if (!(pair.config == config))
    throw InputError("istft: window pair built for a different config");
  const int w = config.window_size();
  const int h = config.hop_size();
  const int lead = w - h;

  FftPlan plan(config.dft_size());
  std::vector<double> out(signal_length, 0.0);
  for (int64_t t = 0; t < spectrogram.num_frames(); ++t) {
    std::vector<double> samples = inverse_frame(spectrogram.frames[t], plan, w);
    for (int n = 0; n < w; ++n) {
      const int64_t idx = t * h + n - lead;
      if (idx >= 0 && idx < signal_length)
        out[idx] += pair.synthesis[n] * samples[n];
    }
  }
  return out;
}

}  // namespace olastream
