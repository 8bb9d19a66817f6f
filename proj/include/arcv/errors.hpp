// Copyright (c) 2026 The arcv-sim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace arcv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file (bad row, bad number, bad JSON line).
struct ParseError : Error {
  using Error::Error;
};

// Structurally valid input that violates a contract (non-monotone
// timestamps, negative sizes, degenerate parameters).
struct ValidationError : Error {
  using Error::Error;
};

// Not enough samples in a window to evaluate a signal or fit.
struct InsufficientData : Error {
  using Error::Error;
};

// Bad configuration value or unknown policy/flag.
struct ConfigError : Error {
  using Error::Error;
};

// A replay that cannot proceed (e.g. static policy hit an OOM with swap
// disabled and has no restart semantics).
struct SimulationError : Error {
  using Error::Error;
};

// Failure raised by a metrics-source or limit-enforcer port.
struct PortError : Error {
  using Error::Error;
};

}  // namespace arcv
