// Copyright 2026 The Olastream Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "olastream/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "olastream/errors.hpp"

namespace olastream {

namespace {

// mt19937_64 with an explicit bit-to-double mapping, so generated signals
// are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}
  double uniform() { return (gen_() >> 11) * 0x1.0p-53; }  // [0, 1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1 + 1e-300)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 gen_;
};

void normalize_peak(std::vector<double>& x, double peak) {
  double max_abs = 0.0;
  for (double v : x) max_abs = std::max(max_abs, std::abs(v));
  if (max_abs > 0.0)
    for (double& v : x) v *= peak / max_abs;
}

int sample_count(double duration_s, int sample_rate) {
  if (duration_s <= 0.0) throw InputError("synth: duration must be positive");
  if (sample_rate <= 0) throw InputError("synth: sample rate must be positive");
  return static_cast<int>(std::llround(duration_s * sample_rate));
}

std::vector<double> speechlike_voice(uint64_t seed, int n, int sample_rate,
                                     double pitch_scale) {
  Rng rng(seed);
  const double f_base = rng.uniform(170.0, 230.0) * pitch_scale;
  const double f_dev = rng.uniform(30.0, 60.0) * pitch_scale;
  const double f_mod = rng.uniform(0.2, 0.5);
  const double phase0 = rng.uniform(0.0, 2.0 * std::numbers::pi);

  // Syllable on/off schedule with raised-cosine edges.
  const int ramp = sample_rate / 50;  // 20 ms
  std::vector<double> env(n, 0.0);
  int pos = 0;
  while (pos < n) {
    const int voiced = static_cast<int>(rng.uniform(0.15, 0.4) * sample_rate);
    const int pause = static_cast<int>(rng.uniform(0.05, 0.15) * sample_rate);
    for (int i = 0; i < voiced && pos + i < n; ++i) {
      double e = 1.0;
      if (i < ramp)
        e = 0.5 - 0.5 * std::cos(std::numbers::pi * i / ramp);
      else if (voiced - i <= ramp)
        e = 0.5 - 0.5 * std::cos(std::numbers::pi * (voiced - i) / ramp);
      env[pos + i] = e;
    }
    pos += voiced + pause;
  }

  std::vector<double> x(n);
  double phase = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / sample_rate;
    const double f0 =
        f_base + f_dev * std::sin(2.0 * std::numbers::pi * f_mod * t + phase0);
    phase += 2.0 * std::numbers::pi * f0 / sample_rate;
    double s = 0.0;
    double amp = 1.0;
    for (int h = 1; h <= 5; ++h) {
      s += amp * std::sin(h * phase);
      amp *= 0.5;
    }
    x[i] = env[i] * s;
  }
  normalize_peak(x, 0.5);
  return x;
}

}  // namespace

std::vector<double> synth_speechlike(uint64_t seed, double duration_s,
                                     int sample_rate) {
  return speechlike_voice(seed, sample_count(duration_s, sample_rate),
                          sample_rate, 1.0);
}

NoiseKind noise_kind_from_string(const std::string& name) {
  if (name == "white") return NoiseKind::White;
  if (name == "pink") return NoiseKind::Pink;
  if (name == "babble") return NoiseKind::Babble;
  throw ConfigError("unknown noise kind '" + name +
                    "' (expected white, pink or babble)");
}

std::string to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::White:
      return "white";
    case NoiseKind::Pink:
      return "pink";
    case NoiseKind::Babble:
      return "babble";
  }
  return "?";
}

std::vector<double> synth_noise(uint64_t seed, double duration_s,
                                int sample_rate, NoiseKind kind) {
  const int n = sample_count(duration_s, sample_rate);
  std::vector<double> x(n);

  switch (kind) {
    case NoiseKind::White: {
      Rng rng(seed);
      for (double& v : x) v = rng.normal();
      break;
    }
    case NoiseKind::Pink: {
      // Paul Kellet's cascade of one-pole lowpass states summed; close to
      // -3 dB/octave across the audio band.
      Rng rng(seed);
      double b0 = 0, b1 = 0, b2 = 0, b3 = 0, b4 = 0, b5 = 0, b6 = 0;
      for (double& v : x) {
        const double white = rng.normal();
        b0 = 0.99886 * b0 + white * 0.0555179;
        b1 = 0.99332 * b1 + white * 0.0750759;
        b2 = 0.96900 * b2 + white * 0.1538520;
        b3 = 0.86650 * b3 + white * 0.3104856;
        b4 = 0.55000 * b4 + white * 0.5329522;
        b5 = -0.7616 * b5 - white * 0.0168980;
        v = b0 + b1 + b2 + b3 + b4 + b5 + b6 + white * 0.5362;
        b6 = white * 0.115926;
      }
      break;
    }
    case NoiseKind::Babble: {
      static constexpr double kDetune[6] = {0.85, 0.94, 1.0, 1.06, 1.13, 1.21};
      std::fill(x.begin(), x.end(), 0.0);
      for (int v = 0; v < 6; ++v) {
        const auto voice =
            speechlike_voice(seed * 6 + v + 1, n, sample_rate, kDetune[v]);
        for (int i = 0; i < n; ++i) x[i] += voice[i];
      }
      break;
    }
  }
  normalize_peak(x, 0.5);
  return x;
}

MixtureRecord mix_at_snr(std::vector<double> clean, std::vector<double> noise,
                         double snr_db) {
  if (clean.size() != noise.size())
    throw InputError("mix_at_snr: signal lengths do not match");
  double clean_energy = 0.0, noise_energy = 0.0;
  for (double v : clean) clean_energy += v * v;
  for (double v : noise) noise_energy += v * v;
  if (clean_energy <= 0.0 || noise_energy <= 0.0)
    throw InputError("mix_at_snr: zero-energy input");

  const double scale =
      std::sqrt(clean_energy / (noise_energy * std::pow(10.0, snr_db / 10.0)));
  for (double& v : noise) v *= scale;

  MixtureRecord rec;
  rec.mixture.resize(clean.size());
  for (size_t i = 0; i < clean.size(); ++i)
    rec.mixture[i] = clean[i] + noise[i];
  rec.clean = std::move(clean);
  rec.noise = std::move(noise);
  rec.snr_db = snr_db;
  return rec;
}

std::vector<DeskItem> desk_plan(uint64_t seed_base, int count, double snr_lo,
                                double snr_hi) {
  if (count < 0) throw ConfigError("desk plan: count must be >= 0");
  static constexpr NoiseKind kCycle[3] = {NoiseKind::White, NoiseKind::Pink,
                                          NoiseKind::Babble};
  std::vector<DeskItem> plan;
  plan.reserve(count);
  for (int i = 0; i < count; ++i) {
    DeskItem item;
    item.index = i;
    item.seed = seed_base + i;
    item.snr_db =
        count > 1 ? snr_lo + (snr_hi - snr_lo) * i / (count - 1) : snr_lo;
    item.kind = kCycle[i % 3];
    plan.push_back(item);
  }
  return plan;
}

MixtureRecord make_desk_mixture(const DeskItem& item, double duration_s,
                                int sample_rate) {
  auto clean = synth_speechlike(item.seed, duration_s, sample_rate);
  auto noise =
      synth_noise(item.seed + 100000, duration_s, sample_rate, item.kind);
  MixtureRecord rec = mix_at_snr(std::move(clean), std::move(noise), item.snr_db);
  rec.seed = item.seed;
  rec.sample_rate = sample_rate;
  return rec;
}

}  // namespace olastream
