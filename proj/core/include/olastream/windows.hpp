// Copyright 2026 The Olastream Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <string>
#include <vector>

#include "olastream/stft_config.hpp"

namespace olastream {

// How the synthesis window denominator weighs the C overlapping frames.
// Regular divides by the plain sum of squared analysis taps per hop phase
// and reconstructs under partial sub-frame summation (and plain OLA);
// Weighted divides by the (e+1)-weighted sum and reconstructs under full
// sub-frame summation, where the sub-frame at in-frame position p is
// summed p+1 times.
enum class WindowDesign { Regular, Weighted };

// Which overlap-add identity to check: Partial sums each hop phase once
// per overlapping frame, Full weighs frame e by e+1.
enum class Summation { Partial, Full };

std::string to_string(WindowDesign design);
std::string to_string(Summation rule);

// Analysis window g and its matched synthesis window l.
struct WindowPair {
  std::vector<double> analysis;
  std::vector<double> synthesis;
  WindowDesign design;
  StftConfig config;
};

// Periodic (DFT-even) square-root Hann: g[n] = sin(pi*n/W), n in [0, W).
// Periodic rather than symmetric so the per-hop-phase sum of squares is
// the constant C/2, which the Regular design relies on.
std::vector<double> sqrt_hann_window(int window_size);

std::vector<double> rectangular_window(int window_size);

// Builds the synthesis window from the analysis window:
//   Regular:   l[n] = g[n] / sum_e g[e*H + (n mod H)]^2
//   Weighted:  l[n] = g[n] / sum_e (e+1) * g[e*H + (n mod H)]^2
// Throws ConfigError naming the hop phase if any denominator falls below
// `epsilon`.
WindowPair design_synthesis_window(std::vector<double> analysis,
                                   const StftConfig& config,
                                   WindowDesign design,
                                   double epsilon = 1e-12);

struct ColaReport {
  double max_deviation = 0.0;
  bool pass = false;
};

// Checks the reconstruction identity at every hop phase m:
//   Partial: sum_e l[e*H+m] * g[e*H+m] == 1
//   Full:    sum_e (e+1) * l[e*H+m] * g[e*H+m] == 1
// pass iff the max absolute deviation is <= 1e-10.
ColaReport verify_cola(const WindowPair& pair, Summation rule);

}  // namespace olastream
