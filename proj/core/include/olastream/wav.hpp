// Copyright 2026 The Olastream Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <span>
#include <string>
#include <vector>

namespace olastream {

enum class WavFormat { Pcm16, Float32 };

struct WavData {
  std::vector<double> samples;
  int sample_rate = 0;
};

// Reads a mono RIFF/WAVE file holding 16-bit PCM or 32-bit IEEE float.
// PCM samples are scaled to [-1, 1) by 1/32768. Unknown chunks are
// skipped; malformed, truncated or multi-channel files raise IoError.
WavData wav_read(const std::string& path);

// Writes a mono WAV file. Pcm16 values are clamped and rounded; Float32
// round-trips bit-exactly through wav_read.
void wav_write(const std::string& path, std::span<const double> samples,
               int sample_rate, WavFormat format);

}  // namespace olastream
