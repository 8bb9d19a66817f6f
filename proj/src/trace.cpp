// Copyright (c) 2026 The arcv-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "arcv/trace.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "arcv/errors.hpp"
#include "arcv/kernels.hpp"

namespace arcv {

namespace {

void validate_columns(const std::vector<double>& t,
                      const std::vector<uint64_t>& usage,
                      const std::vector<uint64_t>& rss,
                      const std::vector<uint64_t>& swap,
                      double sample_interval) {
  if (t.size() < 2) {
    throw ValidationError("trace needs at least 2 samples, got " +
                          std::to_string(t.size()));
  }
  if (usage.size() != t.size() || rss.size() != t.size() ||
      swap.size() != t.size()) {
    throw ValidationError("trace column lengths differ");
  }
  if (!(sample_interval > 0.0) || !std::isfinite(sample_interval)) {
    throw ValidationError("sample_interval must be positive");
  }
  for (size_t i = 0; i < t.size(); ++i) {
    if (!std::isfinite(t[i]) || t[i] < 0.0) {
      throw ValidationError("timestamp at row " + std::to_string(i) +
                            " is not a finite non-negative number");
    }
    if (i > 0 && !(t[i] > t[i - 1])) {
      throw ValidationError("timestamps not strictly increasing at row " +
                            std::to_string(i));
    }
    if (usage[i] < rss[i]) {
      throw ValidationError("usage < rss at row " + std::to_string(i));
    }
  }
}

std::string format_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

double parse_double_field(std::string_view s, size_t line_no) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" +
                     std::string(s) + "'");
  }
  return v;
}

uint64_t parse_bytes_field(std::string_view s, size_t line_no) {
  // Reject negatives up front so "-1" reports as a validation problem
  // rather than an unsigned parse failure.
  if (!s.empty() && s.front() == '-') {
    throw ValidationError("line " + std::to_string(line_no) +
                          ": negative byte value '" + std::string(s) + "'");
  }
  uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad byte value '" +
                     std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

Trace load_csv(std::istream& in, const std::string& label) {
  std::vector<double> t;
  std::vector<uint64_t> usage, rss, swap;
  std::string line;
  size_t line_no = 0;

  // t and usage are required; rss/swap default to 0 when the column is
  // missing.
  int col_t = -1, col_usage = -1, col_rss = -1, col_swap = -1;
  if (!std::getline(in, line)) throw ParseError("empty trace file");
  ++line_no;
  auto header = split_csv(trim(line));
  for (int i = 0; i < static_cast<int>(header.size()); ++i) {
    auto name = trim(header[i]);
    if (name == "t") col_t = i;
    else if (name == "usage") col_usage = i;
    else if (name == "rss") col_rss = i;
    else if (name == "swap") col_swap = i;
  }
  if (col_t < 0 || col_usage < 0) {
    throw ParseError("CSV header must contain columns t and usage");
  }

  while (std::getline(in, line)) {
    ++line_no;
    auto row = trim(line);
    if (row.empty()) continue;
    auto fields = split_csv(row);
    auto field = [&](int col) -> std::string_view {
      if (col < 0 || col >= static_cast<int>(fields.size())) return {};
      return trim(fields[col]);
    };
    if (field(col_t).empty() || field(col_usage).empty()) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": missing t or usage field");
    }
    t.push_back(parse_double_field(field(col_t), line_no));
    usage.push_back(parse_bytes_field(field(col_usage), line_no));
    auto opt_bytes = [&](int col) -> uint64_t {
      auto f = field(col);
      return f.empty() ? 0 : parse_bytes_field(f, line_no);
    };
    rss.push_back(opt_bytes(col_rss));
    swap.push_back(opt_bytes(col_swap));
  }

  double interval =
      t.size() >= 2 ? (t.back() - t.front()) / static_cast<double>(t.size() - 1)
                    : 5.0;
  return Trace(std::move(t), std::move(usage), std::move(rss), std::move(swap),
               interval, label);
}

Trace load_jsonl(std::istream& in, const std::string& label) {
  std::vector<double> t;
  std::vector<uint64_t> usage, rss, swap;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto row = trim(line);
    if (row.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(row);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!j.contains("t") || !j.contains("usage")) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": object needs fields t and usage");
    }
    auto bytes_at = [&](const char* key) -> uint64_t {
      if (!j.contains(key)) return 0;
      const auto& v = j.at(key);
      if (v.is_number_integer() && v.get<int64_t>() < 0) {
        throw ValidationError("line " + std::to_string(line_no) +
                              ": negative byte value for " + key);
      }
      if (!v.is_number()) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": non-numeric value for " + key);
      }
      return v.get<uint64_t>();
    };
    t.push_back(j.at("t").get<double>());
    usage.push_back(bytes_at("usage"));
    rss.push_back(bytes_at("rss"));
    swap.push_back(bytes_at("swap"));
  }
  double interval =
      t.size() >= 2 ? (t.back() - t.front()) / static_cast<double>(t.size() - 1)
                    : 5.0;
  return Trace(std::move(t), std::move(usage), std::move(rss), std::move(swap),
               interval, label);
}

}  // namespace

Trace::Trace(std::vector<double> t, std::vector<uint64_t> usage,
             std::vector<uint64_t> rss, std::vector<uint64_t> swap,
             double sample_interval, std::string label)
    : t_(std::move(t)),
      usage_(std::move(usage)),
      rss_(std::move(rss)),
      swap_(std::move(swap)),
      sample_interval_(sample_interval),
      label_(std::move(label)) {
  validate_columns(t_, usage_, rss_, swap_, sample_interval_);
}

bool Trace::is_uniform(double tol) const {
  for (size_t i = 1; i < t_.size(); ++i) {
    if (std::abs((t_[i] - t_[i - 1]) - sample_interval_) >
        tol * sample_interval_) {
      return false;
    }
  }
  return true;
}

Trace make_trace(const std::vector<MemorySample>& samples, std::string label) {
  std::vector<double> t;
  std::vector<uint64_t> usage, rss, swap;
  t.reserve(samples.size());
  usage.reserve(samples.size());
  rss.reserve(samples.size());
  swap.reserve(samples.size());
  for (const auto& s : samples) {
    t.push_back(s.t);
    usage.push_back(s.usage);
    rss.push_back(s.rss);
    swap.push_back(s.swap);
  }
  double interval =
      t.size() >= 2 ? (t.back() - t.front()) / static_cast<double>(t.size() - 1)
                    : 5.0;
  return Trace(std::move(t), std::move(usage), std::move(rss), std::move(swap),
               interval, std::move(label));
}

Trace load_trace(const std::filesystem::path& path, TraceFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open trace file: " + path.string());
  std::string label = path.stem().string();
  return format == TraceFormat::Csv ? load_csv(in, label)
                                    : load_jsonl(in, label);
}

Trace load_trace(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  if (ext == ".jsonl" || ext == ".ndjson" || ext == ".json") {
    return load_trace(path, TraceFormat::JsonLines);
  }
  return load_trace(path, TraceFormat::Csv);
}

void save_trace(const Trace& trace, const std::filesystem::path& path,
                TraceFormat format) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open file for writing: " + path.string());
  if (format == TraceFormat::Csv) {
    out << "t,usage,rss,swap\n";
    for (size_t i = 0; i < trace.size(); ++i) {
      out << format_double(trace.t()[i]) << ',' << trace.usage()[i] << ','
          << trace.rss()[i] << ',' << trace.swap()[i] << '\n';
    }
  } else {
    for (size_t i = 0; i < trace.size(); ++i) {
      nlohmann::json j;
      j["t"] = trace.t()[i];
      j["usage"] = trace.usage()[i];
      j["rss"] = trace.rss()[i];
      j["swap"] = trace.swap()[i];
      out << j.dump() << '\n';
    }
  }
  if (!out) throw Error("write failed: " + path.string());
}

Trace resample(const Trace& trace, double interval) {
  if (!(interval > 0.0) || !std::isfinite(interval)) {
    throw ValidationError("resample interval must be positive");
  }
  const auto ts = trace.t();
  const double t0 = ts.front();
  const double t_last = ts.back();
  const double span = t_last - t0;
  const double eps = 1e-9 * interval;

  size_t steps = static_cast<size_t>(std::floor(span / interval + 1e-9));
  std::vector<double> grid;
  grid.reserve(steps + 2);
  for (size_t k = 0; k <= steps; ++k) {
    grid.push_back(t0 + static_cast<double>(k) * interval);
  }
  if (grid.back() < t_last - eps) {
    grid.push_back(t_last);  // keep the exact endpoint
  } else {
    grid.back() = t_last;
  }

  auto lerp_u64 = [](uint64_t a, uint64_t b, double w) -> uint64_t {
    double v = static_cast<double>(a) +
               w * (static_cast<double>(b) - static_cast<double>(a));
    return static_cast<uint64_t>(std::llround(v));
  };

  std::vector<double> t_out;
  std::vector<uint64_t> usage, rss, swap;
  t_out.reserve(grid.size());
  usage.reserve(grid.size());
  rss.reserve(grid.size());
  swap.reserve(grid.size());

  size_t seg = 0;  // invariant: ts[seg] <= tg <= ts[seg+1]
  for (double tg : grid) {
    while (seg + 2 < ts.size() && ts[seg + 1] < tg - eps) ++seg;
    t_out.push_back(tg);
    if (std::abs(tg - ts[seg]) <= eps) {
      usage.push_back(trace.usage()[seg]);
      rss.push_back(trace.rss()[seg]);
      swap.push_back(trace.swap()[seg]);
      continue;
    }
    if (std::abs(tg - ts[seg + 1]) <= eps) {
      usage.push_back(trace.usage()[seg + 1]);
      rss.push_back(trace.rss()[seg + 1]);
      swap.push_back(trace.swap()[seg + 1]);
      continue;
    }
    double w = (tg - ts[seg]) / (ts[seg + 1] - ts[seg]);
    usage.push_back(lerp_u64(trace.usage()[seg], trace.usage()[seg + 1], w));
    rss.push_back(lerp_u64(trace.rss()[seg], trace.rss()[seg + 1], w));
    swap.push_back(lerp_u64(trace.swap()[seg], trace.swap()[seg + 1], w));
  }

  return Trace(std::move(t_out), std::move(usage), std::move(rss),
               std::move(swap), interval, trace.label());
}

uint64_t peak(const Trace& trace) { return kernels::max_u64(trace.usage()); }

double duration(const Trace& trace) {
  return trace.t().back() - trace.t().front();
}

}  // namespace arcv
