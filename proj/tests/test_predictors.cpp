// Copyright 2026 The Olastream Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "olastream/engine.hpp"
#include "olastream/errors.hpp"
#include "olastream/predictors.hpp"
#include "support/test_rng.hpp"

using namespace olastream;

namespace {

StftConfig cfg512() { return StftConfig(512, 128, 512, 16000); }

std::vector<ComplexFrame> frames_of(const std::vector<double>& x,
                                    const StftConfig& cfg) {
  return stft(x, sqrt_hann_window(cfg.window_size()), cfg).frames;
}

}  // namespace

TEST_CASE("oracle slot alignment") {
  const auto cfg = cfg512();
  testutil::Rng rng(3);
  const std::vector<double> clean = rng.uniform_vector(4000);
  const auto g = sqrt_hann_window(512);
  const auto ref = stft(clean, g, cfg);
  OraclePredictor oracle(clean, g, cfg, 4);

  SUBCASE("tau=0: slots 1..3 are zero, slot 4 is clean frame 0") {
    const auto batch = oracle.push_frame(0, ref.frames[0]);
    REQUIRE(batch.frames.size() == 4);
    CHECK(batch.frames[0].is_zero());
    CHECK(batch.frames[1].is_zero());
    CHECK(batch.frames[2].is_zero());
    CHECK(batch.frames[3].bins == ref.frames[0].bins);
  }

  SUBCASE("tau=10: slots are clean frames 7,8,9,10") {
    const auto batch = oracle.push_frame(10, ref.frames[10]);
    for (int k = 1; k <= 4; ++k)
      CHECK(batch.frames[k - 1].bins == ref.frames[10 - 4 + k].bins);
  }

  SUBCASE("tau beyond the reference is out of range") {
    CHECK_THROWS_AS(oracle.push_frame(ref.num_frames(), ref.frames[0]),
                    InputError);
  }
}

TEST_CASE("predictors are causal: identical prefixes give identical batches") {
  const auto cfg = cfg512();
  testutil::Rng rng(21);
  std::vector<double> a = rng.uniform_vector(6000);
  std::vector<double> b = a;
  for (size_t i = 4000; i < b.size(); ++i) b[i] = -b[i];  // diverge late

  const auto fa = frames_of(a, cfg);
  const auto fb = frames_of(b, cfg);

  // Frames built only from samples before index 4000 are identical; frame
  // tau touches input up to tau*H + H - 1.
  const int64_t safe_frames = (4000 - 128) / 128;

  WienerGatePredictor wa(cfg, 4), wb(cfg, 4);
  PassthroughPredictor pa(cfg, 4), pb(cfg, 4);
  for (int64_t t = 0; t < safe_frames; ++t) {
    const auto batch_a = wa.push_frame(t, fa[t]);
    const auto batch_b = wb.push_frame(t, fb[t]);
    for (int k = 0; k < 4; ++k)
      CHECK(batch_a.frames[k].bins == batch_b.frames[k].bins);

    const auto pass_a = pa.push_frame(t, fa[t]);
    const auto pass_b = pb.push_frame(t, fb[t]);
    for (int k = 0; k < 4; ++k)
      CHECK(pass_a.frames[k].bins == pass_b.frames[k].bins);
  }
}

TEST_CASE("wiener gate on silence collapses to the gain floor") {
  const auto cfg = cfg512();
  WienerGatePredictor wiener(cfg, 4);
  ComplexFrame zero(cfg.num_bins());
  for (int64_t t = 0; t < 30; ++t) {
    const auto batch = wiener.push_frame(t, zero);
    for (const auto& f : batch.frames) CHECK(f.is_zero());
  }
  for (double g : wiener.current_gain())
    CHECK(g == doctest::Approx(wiener.params().gain_floor));
}

TEST_CASE("wiener gate opens on a high-SNR tone after warm-up") {
  const auto cfg = cfg512();
  const int bin = 40;  // 1250 Hz: dead-center of bin 40 at 512/16k
  const double tone_hz = bin * 16000.0 / 512;
  const int n = 2 * 16000;
  const int onset = 16000 / 2;

  testutil::Rng rng(8);
  std::vector<double> x(n);
  const double noise_amp = 0.0354;  // ~-20 dB relative to the tone power
  for (int i = 0; i < n; ++i) {
    x[i] = noise_amp * rng.normal();
    if (i >= onset)
      x[i] += 0.5 * std::sin(2.0 * std::numbers::pi * tone_hz * i / 16000.0);
  }

  WienerGatePredictor wiener(cfg, 4);
  const auto frames = frames_of(x, cfg);
  // Tone fully covers the analysis window from ~frame 66; give the
  // decision-directed recursion half a second to settle, then the gain at
  // the tone bin must stay open through the next half second.
  const int64_t settle = onset / 128 + 60;
  double min_gain = 1.0;
  for (int64_t t = 0; t < static_cast<int64_t>(frames.size()); ++t) {
    wiener.push_frame(t, frames[t]);
    if (t >= settle && t <= settle + 60)
      min_gain = std::min(min_gain, wiener.current_gain()[bin]);
  }
  CHECK(min_gain >= 0.9);
}

TEST_CASE("wiener gains stay in [floor, 1] and outputs stay finite") {
  const auto cfg = cfg512();
  WienerGatePredictor wiener(cfg, 4);
  testutil::Rng rng(90);
  const std::vector<double> x = rng.uniform_vector(8000, -0.9, 0.9);
  const auto frames = frames_of(x, cfg);
  for (int64_t t = 0; t < static_cast<int64_t>(frames.size()); ++t) {
    const auto batch = wiener.push_frame(t, frames[t]);
    for (const auto& f : batch.frames) CHECK(f.is_finite());
    for (double g : wiener.current_gain()) {
      CHECK(g >= wiener.params().gain_floor);
      CHECK(g <= 1.0);
    }
  }
}

TEST_CASE("wiener parameter validation") {
  const auto cfg = cfg512();
  WienerGateParams bad;
  bad.beta = 1.5;
  CHECK_THROWS_AS(WienerGatePredictor(cfg, 4, bad), ConfigError);
  bad = {};
  bad.gain_floor = 0.0;
  CHECK_THROWS_AS(WienerGatePredictor(cfg, 4, bad), ConfigError);
  bad = {};
  bad.noise_init_frames = 0;
  CHECK_THROWS_AS(WienerGatePredictor(cfg, 4, bad), ConfigError);
}

TEST_CASE("out-of-order frames are rejected by stateful predictors") {
  const auto cfg = cfg512();
  ComplexFrame zero(cfg.num_bins());
  WienerGatePredictor wiener(cfg, 4);
  PassthroughPredictor pass(cfg, 4);
  wiener.push_frame(0, zero);
  pass.push_frame(0, zero);
  CHECK_THROWS_AS(wiener.push_frame(5, zero), InputError);
  CHECK_THROWS_AS(pass.push_frame(2, zero), InputError);
}
