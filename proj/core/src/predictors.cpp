// Copyright 2026 The Olastream Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "olastream/predictors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "olastream/errors.hpp"

namespace olastream {

OraclePredictor::OraclePredictor(std::span<const double> reference,
                                 std::span<const double> analysis_window,
                                 const StftConfig& config, int num_slots)
    : reference_(stft(reference, analysis_window, config)),
      num_slots_(num_slots),
      zero_(config.num_bins()) {
  if (num_slots < 1) throw ConfigError("oracle: slot count must be >= 1");
}

PredictionBatch OraclePredictor::push_frame(int64_t frame_index,
                                            const ComplexFrame&) {
  if (frame_index < 0 || frame_index >= reference_.num_frames())
    throw InputError("oracle: frame " + std::to_string(frame_index) +
                     " is beyond the reference signal");
  PredictionBatch batch;
  batch.batch_index = frame_index;
  batch.frames.reserve(num_slots_);
  for (int k = 1; k <= num_slots_; ++k) {
    const int64_t t = frame_index - num_slots_ + k;
    batch.frames.push_back(t < 0 ? zero_ : reference_.frames[t]);
  }
  return batch;
}

PassthroughPredictor::PassthroughPredictor(const StftConfig& config,
                                           int num_slots)
    : num_slots_(num_slots), zero_(config.num_bins()) {
  if (num_slots < 1) throw ConfigError("passthrough: slot count must be >= 1");
}

void PassthroughPredictor::reset() {
  history_.clear();
  frames_seen_ = 0;
}

PredictionBatch PassthroughPredictor::push_frame(int64_t frame_index,
                                                 const ComplexFrame& mixture) {
  if (frame_index != frames_seen_)
    throw InputError("passthrough: frames must be pushed in order from 0");
  history_.push_back(mixture);
  if (static_cast<int>(history_.size()) > num_slots_) history_.pop_front();
  ++frames_seen_;

  PredictionBatch batch;
  batch.batch_index = frame_index;
  batch.frames.reserve(num_slots_);
  const int64_t oldest = frame_index - static_cast<int64_t>(history_.size()) + 1;
  for (int k = 1; k <= num_slots_; ++k) {
    const int64_t t = frame_index - num_slots_ + k;
    batch.frames.push_back(t < 0 ? zero_ : history_[t - oldest]);
  }
  return batch;
}

WienerGatePredictor::WienerGatePredictor(const StftConfig& config,
                                         int num_slots,
                                         const WienerGateParams& params)
    : config_(config), num_slots_(num_slots), params_(params) {
  if (num_slots < 1) throw ConfigError("wiener: slot count must be >= 1");
  if (params.beta <= 0.0 || params.beta >= 1.0)
    throw ConfigError("wiener: beta must be in (0, 1)");
  if (params.gain_floor <= 0.0 || params.gain_floor >= 1.0)
    throw ConfigError("wiener: gain floor must be in (0, 1)");
  if (params.noise_init_frames < 1)
    throw ConfigError("wiener: need at least one noise init frame");
  reset();
}

void WienerGatePredictor::reset() {
  const size_t bins = config_.num_bins();
  noise_psd_.assign(bins, 0.0);
  prev_gain_.assign(bins, 1.0);
  prev_post_.assign(bins, 0.0);
  hist_frames_.clear();
  hist_gains_.clear();
  frames_seen_ = 0;
}

PredictionBatch WienerGatePredictor::push_frame(int64_t frame_index,
                                                const ComplexFrame& mixture) {
  if (frame_index != frames_seen_)
    throw InputError("wiener: frames must be pushed in order from 0");
  const int bins = config_.num_bins();
  if (mixture.num_bins() != bins)
    throw InputError("wiener: mixture frame has the wrong bin count");

  constexpr double kPsdFloor = 1e-20;
  std::vector<double> post(bins);
  std::vector<double> gain(bins);
  for (int f = 0; f < bins; ++f) {
    const double power = std::norm(mixture.bins[f]);
    if (frames_seen_ < params_.noise_init_frames) {
      noise_psd_[f] =
          (noise_psd_[f] * frames_seen_ + power) / (frames_seen_ + 1);
    } else if (power < noise_psd_[f]) {
      noise_psd_[f] += params_.noise_track_down * (power - noise_psd_[f]);
    } else {
      noise_psd_[f] += params_.noise_track_up * (power - noise_psd_[f]);
    }
    const double lambda =
        std::max(params_.noise_bias_comp * noise_psd_[f], kPsdFloor);
    post[f] = power / lambda;
    const double xi = params_.beta * prev_gain_[f] * prev_gain_[f] *
                          prev_post_[f] +
                      (1.0 - params_.beta) * std::max(post[f] - 1.0, 0.0);
    gain[f] = std::max(xi / (1.0 + xi), params_.gain_floor);
  }

  hist_frames_.push_back(mixture);
  hist_gains_.push_back(gain);
  if (static_cast<int>(hist_frames_.size()) > num_slots_) {
    hist_frames_.pop_front();
    hist_gains_.pop_front();
  }
  const int64_t oldest =
      frame_index - static_cast<int64_t>(hist_frames_.size()) + 1;

  PredictionBatch batch;
  batch.batch_index = frame_index;
  batch.frames.reserve(num_slots_);
  for (int k = 1; k <= num_slots_; ++k) {
    const int64_t t = frame_index - num_slots_ + k;
    if (t < 0) {
      batch.frames.emplace_back(bins);
      continue;
    }
    ComplexFrame out(bins);
    const ComplexFrame& src = hist_frames_[t - oldest];
    if (k == num_slots_) {
      for (int f = 0; f < bins; ++f) out.bins[f] = gain[f] * src.bins[f];
    } else {
      // Lookahead refinement: the smallest gain any of the frames t..tau
      // assigned to each bin.
      for (int f = 0; f < bins; ++f) {
        double g = hist_gains_[t - oldest][f];
        for (size_t j = t - oldest + 1; j < hist_gains_.size(); ++j)
          g = std::min(g, hist_gains_[j][f]);
        out.bins[f] = g * src.bins[f];
      }
    }
    batch.frames.push_back(std::move(out));
  }

  prev_gain_ = std::move(gain);
  prev_post_ = std::move(post);
  ++frames_seen_;
  return batch;
}

}  // namespace olastream
