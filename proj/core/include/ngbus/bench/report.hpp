// Copyright 2026 The ngbus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NGBUS__BENCH__REPORT_HPP_
#define NGBUS__BENCH__REPORT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ngbus/bench/stats.hpp"

namespace ngbus::bench {

/// Per-run receive-path and zero-copy diagnostics at the measuring sink.
struct SinkDiagnostics
{
  std::uint64_t image_deliveries{0};
  std::uint64_t image_copy_total{0};
  std::uint64_t cross_domain_surfaced{0};
  std::uint64_t wrong_domain{0};
  std::uint64_t queue_full{0};
  std::uint64_t malformed{0};
};

/// Aggregated result of one benchmark run.
struct BenchReport
{
  std::string scenario;
  std::string mode;
  std::uint64_t sample_count{0};
  std::uint64_t discarded_warmup{0};
  std::uint64_t anomalies{0};
  DistStats stats;
  SinkDiagnostics diagnostics;

  // Config echo: the exact topology the run executed, plus the headline
  // knobs duplicated for table rendering.
  std::string topology_json;
  std::uint32_t width{0};
  std::uint32_t height{0};
  double fps{0.0};
  unsigned threads{0};
  std::string image_qos;
  std::uint32_t seed{0};

  // Environment.
  std::string host;
  unsigned cpu_count{0};
  std::string timestamp;
};

std::string to_json_string(const BenchReport & report);

/// \throws Error{kIoFailed} / Error{kConfigInvalid}.
BenchReport report_from_json_string(const std::string & text);

void write_report(const BenchReport & report, const std::string & path);
BenchReport read_report(const std::string & path);

/// samples.csv: "seq,latency_ns" header plus one row per raw sample.
void write_samples_csv(const std::vector<LatencySample> & samples, const std::string & path);

/// Latency column of a samples.csv. \throws Error{kIoFailed}, Error{kEmptyInput}.
std::vector<std::int64_t> read_samples_csv_latencies(const std::string & path);

/// plotdata: 100-bin histogram between p1 and p99 plus the five-number
/// boxplot summary, one "# name" section header per block.
void write_plotdata(const std::vector<std::int64_t> & latencies_ns, const std::string & path);

}  // namespace ngbus::bench

#endif  // NGBUS__BENCH__REPORT_HPP_
