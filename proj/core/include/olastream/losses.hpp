// Copyright 2026 The Olastream Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "olastream/frame.hpp"

namespace olastream {

// One evaluated loss: the total, its named addends (plain sums, not
// mean-normalized), and the cell counts needed to derive per-cell means.
struct LossBreakdown {
  double total = 0.0;
  std::map<std::string, double> components;
  std::optional<double> alpha;       // GEQ factor when applicable
  uint64_t spectrogram_cells = 0;    // TF cells per spectral component
  uint64_t waveform_samples = 0;     // samples in the waveform component
};

// L1 distance of K estimated spectrograms to one target, summed over the
// real parts, imaginary parts and magnitudes of every time-frequency cell:
//   sum_k ( ||R_k - Re(S)||_1 + ||I_k - Im(S)||_1 + || |S_k| - |S| ||_1 )
LossBreakdown loss_ri_mag(std::span<const Spectrogram> estimates,
                          const Spectrogram& target);

// Waveform L1 plus the magnitude L1 of the two signals' spectrograms:
//   ||est - target||_1 + || |STFT(est)| - |STFT(target)| ||_1
// The STFT uses the square-root Hann analysis window and the engine's
// framing/padding convention for the given config.
LossBreakdown loss_wav_mag(std::span<const double> est_signal,
                           std::span<const double> target_signal,
                           const StftConfig& config);

// alpha = argmin_a ||a*est - target||_2^2 = (est . target) / (est . est).
// Throws InputError for an all-zero estimate.
double gain_equalization_factor(std::span<const double> est_signal,
                                std::span<const double> target_signal);

// loss_wav_mag(alpha * est, target), with alpha recorded in the breakdown.
LossBreakdown loss_wav_mag_geq(std::span<const double> est_signal,
                               std::span<const double> target_signal,
                               const StftConfig& config);

// Reports are clamped to +/- this many dB instead of emitting infinities.
inline constexpr double kSiSdrCapDb = 120.0;

// Scale-invariant signal-to-distortion ratio in dB: the estimate is
// projected onto the reference, and the energy ratio of the projection to
// the residual is returned. +cap when the residual is numerically zero,
// -cap when the projection is.
double si_sdr(std::span<const double> estimate,
              std::span<const double> reference);

// Verifies that the GEQ factor minimizes ||a*est - target||_2^2 against
// perturbations a +/- eps with eps = 1e-3*|alpha| + 1e-6.
bool alpha_optimality_check(std::span<const double> est_signal,
                            std::span<const double> target_signal);

}  // namespace olastream
