// Copyright 2026 The Olastream Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "olastream/windows.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "olastream/errors.hpp"

namespace olastream {

std::string to_string(WindowDesign design) {
  return design == WindowDesign::Regular ? "regular" : "weighted";
}

std::string to_string(Summation rule) {
  return rule == Summation::Partial ? "partial" : "full";
}

std::vector<double> sqrt_hann_window(int window_size) {
  if (window_size < 2 || window_size % 2 != 0)
    throw ConfigError("sqrt-hann window size must be even and >= 2");
  std::vector<double> g(window_size);
  for (int n = 0; n < window_size; ++n)
    g[n] = std::sin(std::numbers::pi * n / window_size);
  return g;
}

std::vector<double> rectangular_window(int window_size) {
  if (window_size < 1) throw ConfigError("window size must be positive");
  return std::vector<double>(window_size, 1.0);
}

WindowPair design_synthesis_window(std::vector<double> analysis,
                                   const StftConfig& config,
                                   WindowDesign design, double epsilon) {
  const int w = config.window_size();
  const int h = config.hop_size();
  const int c = config.num_overlap();
  if (static_cast<int>(analysis.size()) != w)
    throw InputError("analysis window length does not match the config");
  for (double v : analysis)
    if (!std::isfinite(v))
      throw InputError("analysis window contains non-finite values");

  // One denominator per hop phase.
  std::vector<double> denom(h, 0.0);
  for (int m = 0; m < h; ++m) {
    for (int e = 0; e < c; ++e) {
      const double g = analysis[e * h + m];
      const double weight = design == WindowDesign::Weighted ? e + 1.0 : 1.0;
      denom[m] += weight * g * g;
    }
    if (denom[m] < epsilon)
      throw ConfigError("degenerate synthesis window: denominator below " +
                        std::to_string(epsilon) + " at hop phase " +
                        std::to_string(m));
  }

  std::vector<double> synthesis(w);
  for (int n = 0; n < w; ++n) synthesis[n] = analysis[n] / denom[n % h];
  return WindowPair{std::move(analysis), std::move(synthesis), design, config};
}

ColaReport verify_cola(const WindowPair& pair, Summation rule) {
  const int h = pair.config.hop_size();
  const int c = pair.config.num_overlap();
  ColaReport report;
  for (int m = 0; m < h; ++m) {
    double sum = 0.0;
    for (int e = 0; e < c; ++e) {
      const double weight = rule == Summation::Full ? e + 1.0 : 1.0;
      sum += weight * pair.synthesis[e * h + m] * pair.analysis[e * h + m];
    }
    report.max_deviation = std::max(report.max_deviation, std::abs(sum - 1.0));
  }
  report.pass = report.max_deviation <= 1e-10;
  return report;
}

}  // namespace olastream
