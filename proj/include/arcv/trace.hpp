// Copyright (c) 2026 The arcv-sim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace arcv {

// One scrape of the container memory metrics: usage, resident set, swap.
struct MemorySample {
  double t = 0.0;      // seconds since run start
  uint64_t usage = 0;  // bytes
  uint64_t rss = 0;    // bytes, usage >= rss
  uint64_t swap = 0;   // bytes

  friend bool operator==(const MemorySample&, const MemorySample&) = default;
};

enum class TraceFormat { Csv, JsonLines };

// Memory series for one container run. Columns are stored contiguously so
// the scan kernels can run straight over them. Immutable after
// construction; safe to share across concurrent replays.
class Trace {
 public:
  Trace() = default;
  // Validates on construction: >= 2 samples, strictly increasing finite
  // non-negative t, usage >= rss. Throws ValidationError.
  Trace(std::vector<double> t, std::vector<uint64_t> usage,
        std::vector<uint64_t> rss, std::vector<uint64_t> swap,
        double sample_interval, std::string label);

  size_t size() const { return t_.size(); }
  MemorySample sample(size_t i) const {
    return {t_[i], usage_[i], rss_[i], swap_[i]};
  }
  std::span<const double> t() const { return t_; }
  std::span<const uint64_t> usage() const { return usage_; }
  std::span<const uint64_t> rss() const { return rss_; }
  std::span<const uint64_t> swap() const { return swap_; }

  double sample_interval() const { return sample_interval_; }
  const std::string& label() const { return label_; }

  // Consecutive spacing within tol (relative) of sample_interval.
  bool is_uniform(double tol = 0.01) const;

  friend bool operator==(const Trace&, const Trace&) = default;

 private:
  std::vector<double> t_;
  std::vector<uint64_t> usage_;
  std::vector<uint64_t> rss_;
  std::vector<uint64_t> swap_;
  double sample_interval_ = 5.0;
  std::string label_;
};

// Builds a trace from records, inferring the nominal interval from the
// mean spacing.
Trace make_trace(const std::vector<MemorySample>& samples,
                 std::string label = {});

// CSV with header `t,usage,rss,swap` (seconds, raw bytes) or JSON lines
// with the same field names; rss/swap may be absent and default to 0.
Trace load_trace(const std::filesystem::path& path, TraceFormat format);
// Format picked from the extension (.csv / .jsonl|.ndjson|.json).
Trace load_trace(const std::filesystem::path& path);
void save_trace(const Trace& trace, const std::filesystem::path& path,
                TraceFormat format);

// Piecewise-linear interpolation onto a uniform grid from the first to the
// last sample time; endpoint values are preserved exactly, and grid points
// that land on existing samples copy them bit-exactly (so resampling an
// already-uniform trace at its own interval is the identity).
Trace resample(const Trace& trace, double interval);

uint64_t peak(const Trace& trace);     // max usage, bytes
double duration(const Trace& trace);   // last t - first t, seconds

}  // namespace arcv
