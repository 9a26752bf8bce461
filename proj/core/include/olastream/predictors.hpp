// Copyright 2026 The Olastream Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <deque>
#include <span>
#include <vector>

#include "olastream/engine.hpp"

namespace olastream {

// Emits the true frames of a known reference signal: the stand-in for a
// perfectly trained model, used by the perfect-reconstruction tests. The
// reference is analyzed once with the same framing as the engine.
class OraclePredictor final : public Predictor {
 public:
  OraclePredictor(std::span<const double> reference,
                  std::span<const double> analysis_window,
                  const StftConfig& config, int num_slots);

  void reset() override {}
  int num_slots() const override { return num_slots_; }
  PredictionBatch push_frame(int64_t frame_index,
                             const ComplexFrame& mixture) override;

 private:
  Spectrogram reference_;
  int num_slots_;
  ComplexFrame zero_;
};

// Buffers the mixture frames and predicts them unchanged.
class PassthroughPredictor final : public Predictor {
 public:
  PassthroughPredictor(const StftConfig& config, int num_slots);

  void reset() override;
  int num_slots() const override { return num_slots_; }
  PredictionBatch push_frame(int64_t frame_index,
                             const ComplexFrame& mixture) override;

 private:
  int num_slots_;
  ComplexFrame zero_;
  std::deque<ComplexFrame> history_;
  int64_t frames_seen_ = 0;
};

struct WienerGateParams {
  double beta = 0.98;           // decision-directed a-priori SNR mixing
  double gain_floor = 0.1;
  int noise_init_frames = 5;    // initial noise PSD = mean of these frames
  double noise_track_down = 0.05;
  double noise_track_up = 2e-4;
  double noise_bias_comp = 2.0; // compensates the minimum-tracking bias
};

// Causal spectral-gating baseline. The current frame (slot K) is gated
// with the classic decision-directed Wiener gain
//   xi  = beta * G^2 * gamma (previous frame) + (1-beta) * max(gamma-1, 0)
//   G   = max(xi / (1+xi), gain_floor)
// over a recursively min-tracked noise PSD. Past slots k < K re-gate frame
// t = tau-K+k with the per-bin minimum of the gains computed for frames
// t..tau: the frames after t reveal whether t's gain was hangover, which
// t could not know at its own time. Re-playing the stored gains unchanged
// would make overlapped re-synthesis bit-identical to single-frame OLA, so
// any difference between the modes is purely this lookahead refinement.
class WienerGatePredictor final : public Predictor {
 public:
  WienerGatePredictor(const StftConfig& config, int num_slots,
                      const WienerGateParams& params = {});

  void reset() override;
  int num_slots() const override { return num_slots_; }
  PredictionBatch push_frame(int64_t frame_index,
                             const ComplexFrame& mixture) override;

  const WienerGateParams& params() const { return params_; }
  // Gain vector applied to the most recent frame (slot K); for tests.
  const std::vector<double>& current_gain() const { return prev_gain_; }

 private:
  StftConfig config_;
  int num_slots_;
  WienerGateParams params_;

  std::vector<double> noise_psd_;
  std::vector<double> prev_gain_;
  std::vector<double> prev_post_;
  std::deque<ComplexFrame> hist_frames_;
  std::deque<std::vector<double>> hist_gains_;
  int64_t frames_seen_ = 0;
};

}  // namespace olastream
