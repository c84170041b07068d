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

#ifndef NGBUS__BENCH__STATS_HPP_
#define NGBUS__BENCH__STATS_HPP_

#include <cstdint>
#include <vector>

#include "ngbus/time.hpp"

namespace ngbus::bench {

/// One end-to-end timing observation at the sink.
struct LatencySample
{
  std::uint64_t seq{0};
  Time capture_stamp;
  Time done_stamp;

  std::int64_t latency_ns() const noexcept
  {
    return done_stamp.nanos - capture_stamp.nanos;
  }
};

/// Distribution summary in nanoseconds. Percentiles use the nearest-rank
/// rule: the p-th percentile is the sorted element at 1-based index
/// ceil(p/100 * n). stddev is the population standard deviation.
struct DistStats
{
  std::int64_t min{0};
  std::int64_t p5{0};
  std::int64_t p25{0};
  std::int64_t median{0};
  std::int64_t p75{0};
  std::int64_t p95{0};
  std::int64_t p99{0};
  std::int64_t max{0};
  double mean{0.0};
  double stddev{0.0};

  std::int64_t iqr() const noexcept {return p75 - p25;}
};

/// Nearest-rank percentile of an already-sorted sequence, p in (0, 100].
std::int64_t percentile_sorted(const std::vector<std::int64_t> & sorted, double p);

/// \throws Error{kEmptyInput}.
DistStats compute_stats(const std::vector<std::int64_t> & latencies_ns);

}  // namespace ngbus::bench

#endif  // NGBUS__BENCH__STATS_HPP_
