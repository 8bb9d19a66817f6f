// Copyright (c) 2026 The arcv-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "arcv/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cmath>

namespace arcv::kernels {

namespace {

#define ARCV_AVX2 __attribute__((target("avx2,fma")))

// Exact u64 -> f64 for values < 2^52 (plenty for byte counts): stuff the
// integer into the mantissa of 2^52 and subtract the exponent bias back out.
ARCV_AVX2 inline __m256d cvt_u64_f64(__m256i v) {
  const __m256i exp52 = _mm256_set1_epi64x(0x4330000000000000LL);
  const __m256d bias = _mm256_set1_pd(4503599627370496.0);  // 2^52
  return _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(v, exp52)), bias);
}

ARCV_AVX2 inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

ARCV_AVX2 uint64_t max_u64_avx2(const uint64_t* v, size_t n) {
  size_t i = 0;
  __m256i m = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) {
    __m256i x =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    // byte counts fit in int64, so the signed compare is exact
    __m256i gt = _mm256_cmpgt_epi64(x, m);
    m = _mm256_blendv_epi8(m, x, gt);
  }
  alignas(32) uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), m);
  uint64_t best = 0;
  for (uint64_t lane : lanes) {
    if (lane > best) best = lane;
  }
  for (; i < n; ++i) {
    if (v[i] > best) best = v[i];
  }
  return best;
}

ARCV_AVX2 int64_t first_above_u64_avx2(const uint64_t* v, size_t n,
                                       double threshold) {
  const __m256d thr = _mm256_set1_pd(threshold);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x = cvt_u64_f64(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i)));
    int mask = _mm256_movemask_pd(_mm256_cmp_pd(x, thr, _CMP_GT_OQ));
    if (mask != 0) {
      return static_cast<int64_t>(i) + __builtin_ctz(mask);
    }
  }
  for (; i < n; ++i) {
    if (static_cast<double>(v[i]) > threshold) return static_cast<int64_t>(i);
  }
  return -1;
}

ARCV_AVX2 int64_t first_pair_below_u64_avx2(const uint64_t* v, size_t n,
                                            double factor) {
  if (n < 2) return -1;
  const __m256d f = _mm256_set1_pd(factor);
  const size_t pairs = n - 1;
  size_t i = 0;
  for (; i + 4 <= pairs; i += 4) {
    __m256d a = cvt_u64_f64(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i)));
    __m256d b = cvt_u64_f64(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i + 1)));
    int mask = _mm256_movemask_pd(
        _mm256_cmp_pd(b, _mm256_mul_pd(a, f), _CMP_LT_OQ));
    if (mask != 0) {
      return static_cast<int64_t>(i) + __builtin_ctz(mask);
    }
  }
  for (; i < pairs; ++i) {
    if (static_cast<double>(v[i + 1]) < static_cast<double>(v[i]) * factor) {
      return static_cast<int64_t>(i);
    }
  }
  return -1;
}

ARCV_AVX2 int64_t first_pair_below_f64_avx2(const double* v, size_t n,
                                            double factor) {
  if (n < 2) return -1;
  const __m256d f = _mm256_set1_pd(factor);
  const size_t pairs = n - 1;
  size_t i = 0;
  for (; i + 4 <= pairs; i += 4) {
    __m256d a = _mm256_loadu_pd(v + i);
    __m256d b = _mm256_loadu_pd(v + i + 1);
    int mask = _mm256_movemask_pd(
        _mm256_cmp_pd(b, _mm256_mul_pd(a, f), _CMP_LT_OQ));
    if (mask != 0) {
      return static_cast<int64_t>(i) + __builtin_ctz(mask);
    }
  }
  for (; i < pairs; ++i) {
    if (v[i + 1] < v[i] * factor) return static_cast<int64_t>(i);
  }
  return -1;
}

ARCV_AVX2 bool pairs_within_band_f64_avx2(const double* v, size_t n,
                                          double band) {
  if (n < 2) return true;
  const __m256d bandv = _mm256_set1_pd(band);
  const __m256d signmask = _mm256_set1_pd(-0.0);
  const size_t pairs = n - 1;
  size_t i = 0;
  for (; i + 4 <= pairs; i += 4) {
    __m256d a = _mm256_loadu_pd(v + i);
    __m256d b = _mm256_loadu_pd(v + i + 1);
    __m256d diff = _mm256_andnot_pd(signmask, _mm256_sub_pd(b, a));
    int mask = _mm256_movemask_pd(
        _mm256_cmp_pd(diff, _mm256_mul_pd(bandv, a), _CMP_GT_OQ));
    if (mask != 0) return false;
  }
  for (; i < pairs; ++i) {
    if (std::abs(v[i + 1] - v[i]) > band * v[i]) return false;
  }
  return true;
}

ARCV_AVX2 double sum_f64_avx2(const double* v, size_t n) {
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(v + i));
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += v[i];
  return s;
}

ARCV_AVX2 double dot_f64_avx2(const double* a, const double* b, size_t n) {
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

ARCV_AVX2 double centered_index_dot_f64_avx2(const double* v, size_t n,
                                             double mean) {
  const double kbar = 0.5 * static_cast<double>(n - 1);
  const __m256d kbarv = _mm256_set1_pd(kbar);
  const __m256d meanv = _mm256_set1_pd(mean);
  const __m256d four = _mm256_set1_pd(4.0);
  __m256d idx = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(v + i), meanv);
    acc = _mm256_fmadd_pd(_mm256_sub_pd(idx, kbarv), d, acc);
    idx = _mm256_add_pd(idx, four);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    s += (static_cast<double>(i) - kbar) * (v[i] - mean);
  }
  return s;
}

#undef ARCV_AVX2

}  // namespace

bool avx2_supported() { return __builtin_cpu_supports("avx2") != 0; }

const Ops& avx2_ops() {
  static const Ops table = {
      max_u64_avx2,
      first_above_u64_avx2,
      first_pair_below_u64_avx2,
      first_pair_below_f64_avx2,
      pairs_within_band_f64_avx2,
      sum_f64_avx2,
      dot_f64_avx2,
      centered_index_dot_f64_avx2,
  };
  return table;
}

}  // namespace arcv::kernels

#else  // non-x86: no AVX2 variant, dispatch stays on scalar

namespace arcv::kernels {
const Ops& scalar_ops();
bool avx2_supported() { return false; }
const Ops& avx2_ops() { return scalar_ops(); }
}  // namespace arcv::kernels

#endif
