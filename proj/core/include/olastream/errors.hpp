// Copyright 2026 The Olastream Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <stdexcept>
#include <string>

namespace olastream {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid or inconsistent configuration: bad window/hop/DFT sizes,
// degenerate synthesis-window denominators, incompatible mode/pair combos.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed call data: wrong lengths, wrong shapes, zero-energy inputs.
class InputError : public Error {
 public:
  using Error::Error;
};

// Operation not valid in the current stream state (double finalize,
// latency queried before any release, use after a predictor fault).
class StateError : public Error {
 public:
  using Error::Error;
};

// A predictor violated its contract (slot count, bin count, non-finite
// values). The owning stream is aborted when this is raised.
class PredictorFault : public Error {
 public:
  using Error::Error;
};

// File I/O and parse failures (WAV reader/writer, manifests).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace olastream
