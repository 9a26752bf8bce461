// Copyright 2026 The Olastream Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "olastream/errors.hpp"
#include "olastream/fft.hpp"
#include "support/naive_dft.hpp"
#include "support/test_rng.hpp"

using olastream::FftPlan;

namespace {

double max_bin_error(const std::vector<std::complex<double>>& a,
                     const std::vector<std::complex<double>>& b) {
  REQUIRE(a.size() == b.size());
  double err = 0.0;
  for (size_t i = 0; i < a.size(); ++i)
    err = std::max(err, std::abs(a[i] - b[i]));
  return err;
}

}  // namespace

TEST_CASE("fft matches the naive DFT oracle on random frames") {
  for (int n : {8, 64, 512}) {
    FftPlan plan(n);
    for (uint64_t seed = 1; seed <= 5; ++seed) {
      testutil::Rng rng(seed * 977 + n);
      std::vector<double> x = rng.uniform_vector(n);

      std::vector<std::complex<double>> bins(plan.num_bins());
      plan.forward_real(x, bins);
      const auto expected = oracle::naive_rdft(x);
      CHECK(max_bin_error(bins, expected) < 1e-10);

      CHECK(bins[0].imag() == 0.0);
      CHECK(bins[n / 2].imag() == 0.0);
    }
  }
}

TEST_CASE("inverse fft matches the naive inverse oracle") {
  for (int n : {8, 64, 512}) {
    FftPlan plan(n);
    testutil::Rng rng(31 + n);
    std::vector<std::complex<double>> bins(plan.num_bins());
    for (auto& b : bins) b = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    bins[0] = {bins[0].real(), 0.0};
    bins[n / 2] = {bins[n / 2].real(), 0.0};

    std::vector<double> out(n);
    plan.inverse_real(bins, out);
    const auto expected = oracle::naive_irdft(bins, n);
    for (int i = 0; i < n; ++i)
      CHECK(std::abs(out[i] - expected[i]) < 1e-10);
  }
}

TEST_CASE("forward/inverse round-trips on 100 seeded random frames") {
  FftPlan plan(512);
  double worst = 0.0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    testutil::Rng rng(seed);
    std::vector<double> x = rng.uniform_vector(512);
    std::vector<std::complex<double>> bins(plan.num_bins());
    plan.forward_real(x, bins);
    std::vector<double> back(512);
    plan.inverse_real(bins, back);
    for (int i = 0; i < 512; ++i)
      worst = std::max(worst, std::abs(back[i] - x[i]));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("impulse and single-bin special cases") {
  SUBCASE("impulse at n=0 has a flat unit spectrum") {
    FftPlan plan(64);
    std::vector<double> x(64, 0.0);
    x[0] = 1.0;
    std::vector<std::complex<double>> bins(plan.num_bins());
    plan.forward_real(x, bins);
    for (const auto& b : bins) {
      CHECK(b.real() == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(std::abs(b.imag()) < 1e-12);
    }
  }

  SUBCASE("pure cosine concentrates at its bin") {
    const int n = 64;
    const int k0 = 5;
    FftPlan plan(n);
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i)
      x[i] = std::cos(2.0 * std::numbers::pi * k0 * i / n);
    std::vector<std::complex<double>> bins(plan.num_bins());
    plan.forward_real(x, bins);
    for (int k = 0; k <= n / 2; ++k) {
      const double expected = k == k0 ? n / 2.0 : 0.0;
      CHECK(std::abs(bins[k] - std::complex<double>(expected, 0.0)) < 1e-10);
    }
  }

  SUBCASE("single-bin spectrum inverts to a sampled cosine") {
    const int n = 32;
    FftPlan plan(n);
    std::vector<std::complex<double>> bins(plan.num_bins());
    bins[3] = {1.0, 0.0};
    std::vector<double> out(n);
    plan.inverse_real(bins, out);
    const auto expected = oracle::naive_irdft(bins, n);
    for (int i = 0; i < n; ++i) {
      CHECK(std::abs(out[i] - expected[i]) < 1e-12);
      // 2/n * cos by conjugate symmetry of the implied full spectrum.
      CHECK(out[i] ==
            doctest::Approx(2.0 / n *
                            std::cos(2.0 * std::numbers::pi * 3 * i / n))
                .epsilon(1e-10));
    }
  }
}

TEST_CASE("fft rejects invalid sizes and mismatched buffers") {
  CHECK_THROWS_AS(FftPlan(0), olastream::ConfigError);
  CHECK_THROWS_AS(FftPlan(3), olastream::ConfigError);
  CHECK_THROWS_AS(FftPlan(320), olastream::ConfigError);

  FftPlan plan(16);
  std::vector<double> x(8);
  std::vector<std::complex<double>> bins(plan.num_bins());
  CHECK_THROWS_AS(plan.forward_real(x, bins), olastream::InputError);
}

TEST_CASE("tiny sizes work") {
  for (int n : {2, 4}) {
    FftPlan plan(n);
    testutil::Rng rng(7);
    std::vector<double> x = rng.uniform_vector(n);
    std::vector<std::complex<double>> bins(plan.num_bins());
    plan.forward_real(x, bins);
    CHECK(max_bin_error(bins, oracle::naive_rdft(x)) < 1e-12);
    std::vector<double> back(n);
    plan.inverse_real(bins, back);
    for (int i = 0; i < n; ++i) CHECK(back[i] == doctest::Approx(x[i]));
  }
}
