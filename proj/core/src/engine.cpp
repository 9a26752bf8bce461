// Copyright 2026 The Olastream Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "olastream/engine.hpp"

#include <algorithm>
#include <string>

#include "olastream/errors.hpp"

namespace olastream {

std::string to_string(SynthesisMode mode) {
  switch (mode) {
    case SynthesisMode::SingleFrame:
      return "single";
    case SynthesisMode::OverlappedPartial:
      return "overlap-partial";
    case SynthesisMode::OverlappedFull:
      return "overlap-full";
  }
  return "?";
}

StreamState::StreamState(const StftConfig& config, const WindowPair& pair,
                         SynthesisMode mode, Predictor& predictor)
    : config_(config),
      pair_(pair),
      mode_(mode),
      predictor_(predictor),
      plan_(config.dft_size()) {
  if (!(pair.config == config))
    throw ConfigError("stream: window pair was designed for a different config");
  if (mode == SynthesisMode::OverlappedFull) {
    if (pair.design != WindowDesign::Weighted)
      throw ConfigError("stream: full sub-frame summation requires the weighted window design");
  } else if (pair.design != WindowDesign::Regular) {
    throw ConfigError("stream: " + to_string(mode) +
                      " requires the regular window design");
  }
  const int required =
      mode == SynthesisMode::SingleFrame ? 1 : config.num_overlap();
  if (predictor.num_slots() != required)
    throw ConfigError("stream: predictor emits " +
                      std::to_string(predictor.num_slots()) +
                      " slots, mode needs " + std::to_string(required));

  window_buf_.assign(config.window_size(), 0.0);  // implicit W-H lead padding
  acc_.assign(config.window_size(), 0.0);
  contrib_ring_.assign(config.num_overlap(), 0);
  hop_staging_.reserve(config.hop_size());
  predictor_.reset();
}

void StreamState::process_frame() {
  const int w = config_.window_size();
  const int h = config_.hop_size();
  const int c = config_.num_overlap();
  const int64_t tau = next_frame_;

  const ComplexFrame mixture = forward_frame(window_buf_, pair_.analysis, plan_);
  PredictionBatch batch;
  try {
    batch = predictor_.push_frame(tau, mixture);
  } catch (...) {
    aborted_ = true;
    throw;
  }

  const int slots = mode_ == SynthesisMode::SingleFrame ? 1 : c;
  if (static_cast<int>(batch.frames.size()) != slots ||
      batch.batch_index != tau) {
    aborted_ = true;
    throw PredictorFault("predictor returned " +
                         std::to_string(batch.frames.size()) + " slots for frame " +
                         std::to_string(tau) + ", expected " +
                         std::to_string(slots));
  }
  for (const ComplexFrame& frame : batch.frames) {
    if (frame.num_bins() != config_.num_bins() || !frame.is_finite()) {
      aborted_ = true;
      throw PredictorFault("predictor returned a malformed frame at index " +
                           std::to_string(tau));
    }
  }

  if (mode_ == SynthesisMode::SingleFrame) {
    const std::vector<double> samples = inverse_frame(batch.frames[0], plan_, w);
    for (int n = 0; n < w; ++n) acc_[n] += pair_.synthesis[n] * samples[n];
    for (int u = 0; u < c; ++u) ++contrib_ring_[u];
  } else {
    for (int k = 1; k <= c; ++k) {
      const int64_t t_abs = tau - c + k;
      const ComplexFrame& frame = batch.frames[k - 1];
      if (t_abs < 0) {
        if (!frame.is_zero()) {
          aborted_ = true;
          throw PredictorFault(
              "slot for a negative absolute frame index must be all-zero");
        }
        continue;
      }
      const std::vector<double> samples = inverse_frame(frame, plan_, w);
      if (mode_ == SynthesisMode::OverlappedPartial) {
        // Only the sub-frame at in-frame position p lands in sub-frame tau.
        const int p = c - k;
        for (int j = 0; j < h; ++j)
          acc_[j] += pair_.synthesis[p * h + j] * samples[p * h + j];
        ++contrib_ring_[0];
      } else {
        // Full summation: the tail of this prediction, from the sub-frame
        // boundary of tau onward, feeds sub-frames tau .. t_abs+C-1.
        const int skip = static_cast<int>(tau - t_abs) * h;
        for (int n = skip; n < w; ++n)
          acc_[n - skip] += pair_.synthesis[n] * samples[n];
        for (int u = 0; u < c - static_cast<int>(tau - t_abs); ++u)
          ++contrib_ring_[u];
      }
    }
  }

  // Sub-frame tau is now final. The first C-1 sub-frames are the lead pad.
  if (tau >= c - 1) {
    for (int j = 0; j < h; ++j) pending_.push_back(acc_[j]);
    pending_tags_.push_back({samples_in_, static_cast<uint64_t>(h)});
    finalized_real_ += h;
    contributions_log_.push_back(contrib_ring_[0]);
  }
  std::move(acc_.begin() + h, acc_.end(), acc_.begin());
  std::fill(acc_.end() - h, acc_.end(), 0.0);
  std::move(contrib_ring_.begin() + 1, contrib_ring_.end(),
            contrib_ring_.begin());
  contrib_ring_.back() = 0;
  ++next_frame_;
}

void StreamState::release_ready(std::vector<double>& out) {
  const uint64_t w = config_.window_size();
  // Gate: sample m leaves only once input sample m+W-1 has been consumed
  // (or unconditionally after finalize).
  while (!pending_.empty() &&
         (finalized_ || samples_out_ + w <= samples_in_)) {
    out.push_back(pending_.front());
    pending_.pop_front();
    auto& block = pending_tags_.front();
    const uint64_t eligible_at =
        finalized_ ? samples_in_
                   : std::max(samples_out_ + w, block.first);
    latency_max_ = std::max(
        latency_max_, static_cast<int64_t>(eligible_at - samples_out_));
    if (--block.second == 0) pending_tags_.pop_front();
    ++samples_out_;
  }
}

std::vector<double> StreamState::push_samples(std::span<const double> chunk) {
  if (aborted_) throw StateError("stream aborted after a predictor fault");
  if (finalized_) throw StateError("push_samples after finalize");

  const int h = config_.hop_size();
  size_t i = 0;
  while (i < chunk.size()) {
    const size_t need = h - hop_staging_.size();
    const size_t take = std::min(need, chunk.size() - i);
    hop_staging_.insert(hop_staging_.end(), chunk.begin() + i,
                        chunk.begin() + i + take);
    samples_in_ += take;
    i += take;
    if (static_cast<int>(hop_staging_.size()) == h) {
      std::move(window_buf_.begin() + h, window_buf_.end(),
                window_buf_.begin());
      std::copy(hop_staging_.begin(), hop_staging_.end(),
                window_buf_.end() - h);
      hop_staging_.clear();
      process_frame();
    }
  }
  std::vector<double> out;
  release_ready(out);
  return out;
}

std::vector<double> StreamState::finalize() {
  if (aborted_) throw StateError("stream aborted after a predictor fault");
  if (finalized_) throw StateError("finalize called twice");

  const int h = config_.hop_size();
  const int c = config_.num_overlap();
  const uint64_t total = samples_in_;

  if (total > 0) {
    // Run batches until the sub-frame holding the last real sample is out.
    const int64_t last_batch =
        static_cast<int64_t>((total - 1) / h) + c - 1;
    while (next_frame_ <= last_batch) {
      hop_staging_.resize(h, 0.0);  // trailing zero padding, not input
      std::move(window_buf_.begin() + h, window_buf_.end(),
                window_buf_.begin());
      std::copy(hop_staging_.begin(), hop_staging_.end(),
                window_buf_.end() - h);
      hop_staging_.clear();
      process_frame();
    }
  }
  // Trim the padded tail so output length equals input length.
  while (finalized_real_ > total && !pending_.empty()) {
    pending_.pop_back();
    --finalized_real_;
    auto& block = pending_tags_.back();
    if (--block.second == 0) pending_tags_.pop_back();
  }

  finalized_ = true;
  std::vector<double> out;
  release_ready(out);
  return out;
}

int64_t StreamState::measured_latency() const {
  if (samples_out_ == 0)
    throw StateError("measured_latency: no output has been released yet");
  return latency_max_;
}

std::vector<double> process_offline(std::span<const double> signal,
                                    const StftConfig& config,
                                    const WindowPair& pair, SynthesisMode mode,
                                    Predictor& predictor) {
  StreamState stream(config, pair, mode, predictor);
  std::vector<double> out = stream.push_samples(signal);
  std::vector<double> tail = stream.finalize();
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

std::vector<Spectrogram> assemble_slot_spectrograms(
    std::span<const PredictionBatch> batches, int64_t num_frames,
    const StftConfig& config) {
  if (batches.empty()) return {};
  const int slots = static_cast<int>(batches[0].frames.size());
  const int bins = config.num_bins();
  for (size_t i = 0; i < batches.size(); ++i) {
    if (batches[i].batch_index != static_cast<int64_t>(i))
      throw InputError("assemble_slot_spectrograms: batches must be "
                       "consecutive from index 0");
    if (static_cast<int>(batches[i].frames.size()) != slots)
      throw InputError("assemble_slot_spectrograms: inconsistent slot count");
  }

  const ComplexFrame zero(bins);
  std::vector<Spectrogram> result;
  result.reserve(slots);
  for (int k = 1; k <= slots; ++k) {
    Spectrogram spec{{}, config};
    spec.frames.reserve(num_frames);
    for (int64_t t = 0; t < num_frames; ++t) {
      const int64_t tau = t + slots - k;
      spec.frames.push_back(tau < static_cast<int64_t>(batches.size())
                                ? batches[tau].frames[k - 1]
                                : zero);
    }
    result.push_back(std::move(spec));
  }
  return result;
}

}  // namespace olastream
