// Copyright 2026 The Olastream Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "olastream/wav.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "olastream/errors.hpp"

namespace olastream {

namespace {

constexpr uint16_t kFormatPcm = 0x0001;
constexpr uint16_t kFormatIeeeFloat = 0x0003;

uint32_t read_u32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | static_cast<uint32_t>(p[1]) << 8 |
         static_cast<uint32_t>(p[2]) << 16 | static_cast<uint32_t>(p[3]) << 24;
}

uint16_t read_u16(const uint8_t* p) {
  return static_cast<uint16_t>(p[0] | p[1] << 8);
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(v & 0xff);
  out.push_back(v >> 8 & 0xff);
  out.push_back(v >> 16 & 0xff);
  out.push_back(v >> 24 & 0xff);
}

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(v & 0xff);
  out.push_back(v >> 8 & 0xff);
}

void put_tag(std::vector<uint8_t>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

}  // namespace

WavData wav_read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("wav: cannot open '" + path + "'");
  std::vector<uint8_t> buf((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());

  if (buf.size() < 12 || std::memcmp(buf.data(), "RIFF", 4) != 0 ||
      std::memcmp(buf.data() + 8, "WAVE", 4) != 0)
    throw IoError("wav: '" + path + "' is not a RIFF/WAVE file");

  bool have_fmt = false;
  uint16_t format_tag = 0, channels = 0, bits = 0;
  uint32_t sample_rate = 0;
  WavData out;

  size_t pos = 12;
  while (pos + 8 <= buf.size()) {
    const char* id = reinterpret_cast<const char*>(buf.data() + pos);
    const uint32_t size = read_u32(buf.data() + pos + 4);
    pos += 8;
    if (pos + size > buf.size())
      throw IoError("wav: truncated chunk '" + std::string(id, 4) + "' in '" +
                    path + "'");

    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (size < 16) throw IoError("wav: fmt chunk too small in '" + path + "'");
      format_tag = read_u16(buf.data() + pos);
      channels = read_u16(buf.data() + pos + 2);
      sample_rate = read_u32(buf.data() + pos + 4);
      bits = read_u16(buf.data() + pos + 14);
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      if (!have_fmt)
        throw IoError("wav: data chunk before fmt in '" + path + "'");
      if (channels != 1)
        throw IoError("wav: only mono is supported, '" + path + "' has " +
                      std::to_string(channels) + " channels");
      if (format_tag == kFormatPcm && bits == 16) {
        if (size % 2 != 0) throw IoError("wav: odd PCM16 data size");
        out.samples.reserve(size / 2);
        for (size_t i = 0; i < size; i += 2) {
          const int16_t v =
              static_cast<int16_t>(read_u16(buf.data() + pos + i));
          out.samples.push_back(v / 32768.0);
        }
      } else if (format_tag == kFormatIeeeFloat && bits == 32) {
        if (size % 4 != 0) throw IoError("wav: odd float32 data size");
        out.samples.reserve(size / 4);
        for (size_t i = 0; i < size; i += 4) {
          const uint32_t raw = read_u32(buf.data() + pos + i);
          out.samples.push_back(std::bit_cast<float>(raw));
        }
      } else {
        throw IoError("wav: unsupported encoding (format tag " +
                      std::to_string(format_tag) + ", " +
                      std::to_string(bits) + " bits) in '" + path + "'");
      }
      out.sample_rate = static_cast<int>(sample_rate);
      return out;
    }
    pos += size + size % 2;  // chunks are word-aligned
  }
  throw IoError("wav: no data chunk found in '" + path + "'");
}

void wav_write(const std::string& path, std::span<const double> samples,
               int sample_rate, WavFormat format) {
  if (sample_rate <= 0) throw InputError("wav: sample rate must be positive");

  const bool is_float = format == WavFormat::Float32;
  const uint16_t bytes_per_sample = is_float ? 4 : 2;
  const uint32_t data_size =
      static_cast<uint32_t>(samples.size() * bytes_per_sample);
  const uint32_t fmt_size = is_float ? 18 : 16;
  const uint32_t fact_size = is_float ? 12 : 0;  // whole chunk incl. header
  const uint32_t riff_size = 4 + 8 + fmt_size + fact_size + 8 + data_size;

  std::vector<uint8_t> out;
  out.reserve(8 + riff_size);
  put_tag(out, "RIFF");
  put_u32(out, riff_size);
  put_tag(out, "WAVE");

  put_tag(out, "fmt ");
  put_u32(out, fmt_size);
  put_u16(out, is_float ? kFormatIeeeFloat : kFormatPcm);
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<uint32_t>(sample_rate));
  put_u32(out, static_cast<uint32_t>(sample_rate) * bytes_per_sample);
  put_u16(out, bytes_per_sample);
  put_u16(out, bytes_per_sample * 8);
  if (is_float) {
    put_u16(out, 0);  // cbSize
    put_tag(out, "fact");
    put_u32(out, 4);
    put_u32(out, static_cast<uint32_t>(samples.size()));
  }

  put_tag(out, "data");
  put_u32(out, data_size);
  for (double v : samples) {
    if (is_float) {
      put_u32(out, std::bit_cast<uint32_t>(static_cast<float>(v)));
    } else {
      const long q = std::lround(v * 32768.0);
      put_u16(out, static_cast<uint16_t>(
                       std::clamp(q, -32768L, 32767L)));
    }
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("wav: cannot open '" + path + "' for writing");
  file.write(reinterpret_cast<const char*>(out.data()),
             static_cast<std::streamsize>(out.size()));
  if (!file) throw IoError("wav: write failed for '" + path + "'");
}

}  // namespace olastream
