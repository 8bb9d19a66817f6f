// Copyright (c) 2026 The arcv-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "arcv/kernels.hpp"

// Reference kernels. These define the semantics; the SIMD variants must
// agree with them (bit-exactly for the scan/compare kernels).
namespace arcv::kernels {

namespace {

uint64_t max_u64_scalar(const uint64_t* v, size_t n) {
  uint64_t m = 0;
  for (size_t i = 0; i < n; ++i) {
    if (v[i] > m) m = v[i];
  }
  return m;
}

int64_t first_above_u64_scalar(const uint64_t* v, size_t n, double threshold) {
  for (size_t i = 0; i < n; ++i) {
    if (static_cast<double>(v[i]) > threshold) return static_cast<int64_t>(i);
  }
  return -1;
}

int64_t first_pair_below_u64_scalar(const uint64_t* v, size_t n,
                                    double factor) {
  if (n < 2) return -1;
  for (size_t i = 0; i + 1 < n; ++i) {
    if (static_cast<double>(v[i + 1]) < static_cast<double>(v[i]) * factor) {
      return static_cast<int64_t>(i);
    }
  }
  return -1;
}

int64_t first_pair_below_f64_scalar(const double* v, size_t n, double factor) {
  if (n < 2) return -1;
  for (size_t i = 0; i + 1 < n; ++i) {
    if (v[i + 1] < v[i] * factor) return static_cast<int64_t>(i);
  }
  return -1;
}

bool pairs_within_band_f64_scalar(const double* v, size_t n, double band) {
  if (n < 2) return true;
  for (size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(v[i + 1] - v[i]) > band * v[i]) return false;
  }
  return true;
}

double sum_f64_scalar(const double* v, size_t n) {
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += v[i];
  return s;
}

double dot_f64_scalar(const double* a, const double* b, size_t n) {
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double centered_index_dot_f64_scalar(const double* v, size_t n, double mean) {
  const double kbar = 0.5 * static_cast<double>(n - 1);
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) {
    s += (static_cast<double>(i) - kbar) * (v[i] - mean);
  }
  return s;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops table = {
      max_u64_scalar,
      first_above_u64_scalar,
      first_pair_below_u64_scalar,
      first_pair_below_f64_scalar,
      pairs_within_band_f64_scalar,
      sum_f64_scalar,
      dot_f64_scalar,
      centered_index_dot_f64_scalar,
  };
  return table;
}

}  // namespace arcv::kernels
