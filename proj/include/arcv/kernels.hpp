// Copyright (c) 2026 The arcv-sim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

// Data-parallel inner loops shared by the trace, signal, and footprint
// code: max/sum/dot reductions, ordered-pair band checks, and the centered
// index-dot used by the least-squares forecast.
//
// Every kernel has a scalar reference implementation and an AVX2 variant;
// the active table is selected once at startup from CPU features (override
// with ARCV_KERNEL_ISA=scalar|avx2 or force_isa()). The comparison/scan
// kernels are bit-exact across variants: byte counts are < 2^52, so the
// u64->f64 conversions are exact and every lane performs the same IEEE
// multiply/compare as the scalar loop. The floating-point reductions may
// differ from scalar by reassociation only; equivalence tests bound that
// at 1e-12 relative.
namespace arcv::kernels {

struct Ops {
  // max over v; 0 for empty input
  uint64_t (*max_u64)(const uint64_t* v, size_t n);
  // first i with (double)v[i] > threshold; -1 if none
  int64_t (*first_above_u64)(const uint64_t* v, size_t n, double threshold);
  // first i with (double)v[i+1] < (double)v[i] * factor; -1 if none
  int64_t (*first_pair_below_u64)(const uint64_t* v, size_t n, double factor);
  int64_t (*first_pair_below_f64)(const double* v, size_t n, double factor);
  // true iff |v[i+1] - v[i]| <= band * v[i] for every consecutive pair
  bool (*pairs_within_band_f64)(const double* v, size_t n, double band);
  double (*sum_f64)(const double* v, size_t n);
  double (*dot_f64)(const double* a, const double* b, size_t n);
  // sum over i of (i - (n-1)/2) * (v[i] - mean)
  double (*centered_index_dot_f64)(const double* v, size_t n, double mean);
};

enum class Isa { scalar, avx2 };

const char* to_string(Isa isa);

// True when the host can execute the given variant.
bool cpu_supports(Isa isa);

// Table for an explicit variant. Requesting an unsupported variant throws.
const Ops& ops(Isa isa);

// Runtime-selected table (ARCV_KERNEL_ISA respected on first use).
const Ops& ops();

Isa active_isa();
void force_isa(Isa isa);

// Span conveniences over the active table.
inline uint64_t max_u64(std::span<const uint64_t> v) {
  return ops().max_u64(v.data(), v.size());
}
inline int64_t first_above(std::span<const uint64_t> v, double threshold) {
  return ops().first_above_u64(v.data(), v.size(), threshold);
}
inline int64_t first_pair_below(std::span<const uint64_t> v, double factor) {
  return ops().first_pair_below_u64(v.data(), v.size(), factor);
}
inline int64_t first_pair_below(std::span<const double> v, double factor) {
  return ops().first_pair_below_f64(v.data(), v.size(), factor);
}
inline bool pairs_within_band(std::span<const double> v, double band) {
  return ops().pairs_within_band_f64(v.data(), v.size(), band);
}
inline double sum(std::span<const double> v) {
  return ops().sum_f64(v.data(), v.size());
}
inline double dot(std::span<const double> a, std::span<const double> b) {
  return ops().dot_f64(a.data(), b.data(), a.size());
}
inline double centered_index_dot(std::span<const double> v, double mean) {
  return ops().centered_index_dot_f64(v.data(), v.size(), mean);
}

}  // namespace arcv::kernels
