// Copyright 2026 The Olastream Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace olastream {

// Deterministic harmonic test signal: time-varying fundamental between
// 100 and 300 Hz, five harmonics with decaying amplitudes, an on/off
// syllable envelope with smooth edges, peak-normalized to 0.5. The same
// seed always produces bit-identical output.
std::vector<double> synth_speechlike(uint64_t seed, double duration_s,
                                     int sample_rate);

enum class NoiseKind { White, Pink, Babble };

NoiseKind noise_kind_from_string(const std::string& name);
std::string to_string(NoiseKind kind);

// Deterministic noise: white Gaussian, pink via cumulative one-pole
// filtering of white, or babble-like as a sum of six detuned speechlike
// voices. Peak-normalized to 0.5.
std::vector<double> synth_noise(uint64_t seed, double duration_s,
                                int sample_rate, NoiseKind kind);

struct MixtureRecord {
  std::vector<double> clean;
  std::vector<double> noise;    // already scaled; mixture = clean + noise
  std::vector<double> mixture;
  double snr_db = 0.0;
  uint64_t seed = 0;
  int sample_rate = 0;
};

// Scales the noise so that 10*log10(|clean|^2 / |scaled noise|^2) equals
// snr_db, then mixes. Zero-energy inputs are rejected.
MixtureRecord mix_at_snr(std::vector<double> clean, std::vector<double> noise,
                         double snr_db);

// The fixed evaluation suite: `count` mixtures with seeds seed_base+i,
// SNRs evenly spaced over [snr_lo, snr_hi] and noise kinds cycled
// white/pink/babble.
struct DeskItem {
  int index = 0;
  uint64_t seed = 0;
  double snr_db = 0.0;
  NoiseKind kind = NoiseKind::White;
};

std::vector<DeskItem> desk_plan(uint64_t seed_base = 0, int count = 16,
                                double snr_lo = -8.0, double snr_hi = 3.0);

MixtureRecord make_desk_mixture(const DeskItem& item, double duration_s = 4.0,
                                int sample_rate = 16000);

}  // namespace olastream
