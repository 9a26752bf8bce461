// Copyright 2026 The Olastream Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "olastream/losses.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "olastream/errors.hpp"
#include "olastream/windows.hpp"

namespace olastream {

namespace {

void check_same_shape(const Spectrogram& a, const Spectrogram& b) {
  if (!(a.config == b.config) || a.num_frames() != b.num_frames())
    throw InputError("loss: spectrogram shapes do not match");
}

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

LossBreakdown loss_ri_mag(std::span<const Spectrogram> estimates,
                          const Spectrogram& target) {
  if (estimates.empty()) throw InputError("loss_ri_mag: need at least one estimate");

  double real_l1 = 0.0, imag_l1 = 0.0, mag_l1 = 0.0;
  uint64_t cells = 0;
  for (const Spectrogram& est : estimates) {
    check_same_shape(est, target);
    for (int t = 0; t < target.num_frames(); ++t) {
      const auto& eb = est.frames[t].bins;
      const auto& tb = target.frames[t].bins;
      if (eb.size() != tb.size())
        throw InputError("loss_ri_mag: frame bin counts do not match");
      for (size_t f = 0; f < tb.size(); ++f) {
        real_l1 += std::abs(eb[f].real() - tb[f].real());
        imag_l1 += std::abs(eb[f].imag() - tb[f].imag());
        mag_l1 += std::abs(std::abs(eb[f]) - std::abs(tb[f]));
        ++cells;
      }
    }
  }

  LossBreakdown out;
  out.components["real_part_l1"] = real_l1;
  out.components["imag_part_l1"] = imag_l1;
  out.components["magnitude_l1"] = mag_l1;
  out.total = real_l1 + imag_l1 + mag_l1;
  out.spectrogram_cells = cells;
  return out;
}

LossBreakdown loss_wav_mag(std::span<const double> est_signal,
                           std::span<const double> target_signal,
                           const StftConfig& config) {
  if (est_signal.size() != target_signal.size())
    throw InputError("loss_wav_mag: signal lengths do not match");

  double wav_l1 = 0.0;
  for (size_t i = 0; i < est_signal.size(); ++i)
    wav_l1 += std::abs(est_signal[i] - target_signal[i]);

  const auto g = sqrt_hann_window(config.window_size());
  const Spectrogram est_spec = stft(est_signal, g, config);
  const Spectrogram target_spec = stft(target_signal, g, config);

  double mag_l1 = 0.0;
  uint64_t cells = 0;
  for (int t = 0; t < est_spec.num_frames(); ++t) {
    for (int f = 0; f < est_spec.frames[t].num_bins(); ++f) {
      mag_l1 += std::abs(std::abs(est_spec.frames[t].bins[f]) -
                         std::abs(target_spec.frames[t].bins[f]));
      ++cells;
    }
  }

  LossBreakdown out;
  out.components["waveform_l1"] = wav_l1;
  out.components["magnitude_l1"] = mag_l1;
  out.total = wav_l1 + mag_l1;
  out.spectrogram_cells = cells;
  out.waveform_samples = est_signal.size();
  return out;
}

double gain_equalization_factor(std::span<const double> est_signal,
                                std::span<const double> target_signal) {
  if (est_signal.size() != target_signal.size())
    throw InputError("gain equalization: signal lengths do not match");
  const double energy = dot(est_signal, est_signal);
  if (energy <= 0.0)
    throw InputError("gain equalization: estimate has zero energy");
  return dot(est_signal, target_signal) / energy;
}

LossBreakdown loss_wav_mag_geq(std::span<const double> est_signal,
                               std::span<const double> target_signal,
                               const StftConfig& config) {
  const double alpha = gain_equalization_factor(est_signal, target_signal);
  std::vector<double> scaled(est_signal.begin(), est_signal.end());
  for (double& v : scaled) v *= alpha;
  LossBreakdown out = loss_wav_mag(scaled, target_signal, config);
  out.alpha = alpha;
  return out;
}

double si_sdr(std::span<const double> estimate,
              std::span<const double> reference) {
  if (estimate.size() != reference.size())
    throw InputError("si_sdr: signal lengths do not match");
  const double ref_energy = dot(reference, reference);
  if (ref_energy <= 0.0)
    throw InputError("si_sdr: reference has zero energy");

  const double proj = dot(estimate, reference) / ref_energy;
  double target_energy = 0.0, error_energy = 0.0;
  for (size_t i = 0; i < estimate.size(); ++i) {
    const double t = proj * reference[i];
    const double e = estimate[i] - t;
    target_energy += t * t;
    error_energy += e * e;
  }
  if (error_energy == 0.0) return kSiSdrCapDb;
  if (target_energy == 0.0) return -kSiSdrCapDb;
  return std::clamp(10.0 * std::log10(target_energy / error_energy),
                    -kSiSdrCapDb, kSiSdrCapDb);
}

bool alpha_optimality_check(std::span<const double> est_signal,
                            std::span<const double> target_signal) {
  const double alpha = gain_equalization_factor(est_signal, target_signal);
  const double eps = 1e-3 * std::abs(alpha) + 1e-6;

  const auto residual = [&](double a) {
    double acc = 0.0;
    for (size_t i = 0; i < est_signal.size(); ++i) {
      const double r = a * est_signal[i] - target_signal[i];
      acc += r * r;
    }
    return acc;
  };

  const double at_alpha = residual(alpha);
  return at_alpha <= residual(alpha + eps) && at_alpha <= residual(alpha - eps);
}

}  // namespace olastream
