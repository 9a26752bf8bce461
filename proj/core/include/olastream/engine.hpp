// Copyright 2026 The Olastream Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstdint>
#include <deque>
#include <span>
#include <vector>

#include "olastream/frame.hpp"
#include "olastream/windows.hpp"

namespace olastream {

// How predicted frames are overlap-added into output sub-frames.
//
// SingleFrame: one predicted frame per input frame, classic OLA; the
// contributions to a sub-frame were produced across the last C frames.
// OverlappedPartial: the predictor emits the current and C-1 past frames
// at every step and each output sub-frame is summed from the newest batch
// only (C contributions, all with the newest context). Regular window.
// OverlappedFull: each output sub-frame additionally sums the predictions
// of the same frames from the C-1 previous batches, C(C+1)/2 contributions
// in total; the in-frame position p is summed p+1 times, which the
// Weighted window design compensates for.
enum class SynthesisMode { SingleFrame, OverlappedPartial, OverlappedFull };

std::string to_string(SynthesisMode mode);

// The K frames a predictor emits for one input frame. Slot k (1-based,
// stored at index k-1) is the prediction for absolute frame index
// batch_index - K + k, so slot K is the current frame and slot 1 the
// oldest past frame. Slots for negative absolute indices must be all-zero.
struct PredictionBatch {
  std::vector<ComplexFrame> frames;
  int64_t batch_index = 0;
};

// The seam where an enhancement model attaches. Implementations must be
// causal: the batch for frame t may depend only on mixture frames with
// index <= t. push_frame is called with consecutive indices from 0.
class Predictor {
 public:
  virtual ~Predictor() = default;
  virtual void reset() = 0;
  virtual int num_slots() const = 0;
  virtual PredictionBatch push_frame(int64_t frame_index,
                                     const ComplexFrame& mixture) = 0;
};

// Frame-online streaming state: analysis, prediction, re-synthesis and
// latency bookkeeping for one audio stream.
//
// The stream behaves as if the input were preceded by W-H zeros, so every
// real sample is covered by exactly C analysis frames and perfect
// reconstruction holds over the whole signal. Output samples are released
// only once input sample m+W-1 has been consumed (algorithmic latency of
// exactly W samples); finalize() flushes the trailing pad and trims the
// output back to the input length.
//
// Not thread-safe; one stream per thread, movable between calls. The
// predictor must outlive the stream and is reset() on construction.
class StreamState {
 public:
  StreamState(const StftConfig& config, const WindowPair& pair,
              SynthesisMode mode, Predictor& predictor);

  // Buffers input, runs the predictor once per completed hop, returns any
  // newly released output samples.
  std::vector<double> push_samples(std::span<const double> chunk);

  // Flushes the internal padding, releases the rest of the output. Total
  // released output length equals total input length.
  std::vector<double> finalize();

  // Max over released samples m of the input-consumption count at which m
  // became eligible for release, minus m. Equals W for any input of at
  // least W samples. Throws StateError if nothing has been released.
  int64_t measured_latency() const;

  uint64_t samples_in() const { return samples_in_; }
  uint64_t samples_out() const { return samples_out_; }
  int64_t frames_consumed() const { return next_frame_; }
  SynthesisMode mode() const { return mode_; }

  // Number of windowed sub-frame contributions accumulated into each real
  // output sub-frame, in release order. C for SingleFrame and
  // OverlappedPartial, C(C+1)/2 for OverlappedFull.
  const std::vector<uint32_t>& subframe_contributions() const {
    return contributions_log_;
  }

 private:
  void process_frame();
  void release_ready(std::vector<double>& out);

  StftConfig config_;
  WindowPair pair_;
  SynthesisMode mode_;
  Predictor& predictor_;
  FftPlan plan_;

  std::vector<double> window_buf_;   // last W input samples (zeros at start)
  std::vector<double> hop_staging_;  // partial hop not yet framed
  std::vector<double> acc_;          // OLA accumulator, index 0 = sub-frame tau
  std::vector<uint32_t> contrib_ring_;
  std::deque<double> pending_;       // finalized real samples awaiting release
  // Per finalized sub-frame block: input consumption when it was finalized
  // and how many of its samples are still pending. Feeds measured_latency.
  std::deque<std::pair<uint64_t, uint64_t>> pending_tags_;
  std::vector<uint32_t> contributions_log_;

  int64_t next_frame_ = 0;
  uint64_t samples_in_ = 0;
  uint64_t samples_out_ = 0;
  uint64_t finalized_real_ = 0;  // real samples appended to pending_ so far
  int64_t latency_max_ = -1;
  bool finalized_ = false;
  bool aborted_ = false;
};

// create, push everything, finalize; returns the full output signal.
std::vector<double> process_offline(std::span<const double> signal,
                                    const StftConfig& config,
                                    const WindowPair& pair, SynthesisMode mode,
                                    Predictor& predictor);

// Collects slot k across batches into one spectrogram per k, aligning the
// slot-k frame of batch tau to absolute frame tau-K+k. Frames without a
// batch (start or end of stream) are zero. Result is ordered k = 1..K.
std::vector<Spectrogram> assemble_slot_spectrograms(
    std::span<const PredictionBatch> batches, int64_t num_frames,
    const StftConfig& config);

}  // namespace olastream
