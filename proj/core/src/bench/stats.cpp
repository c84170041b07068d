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

#include "ngbus/bench/stats.hpp"

#include <algorithm>
#include <cmath>

#include "ngbus/errors.hpp"

namespace ngbus::bench {

std::int64_t percentile_sorted(const std::vector<std::int64_t> & sorted, double p)
{
  const std::size_t n = sorted.size();
  std::size_t rank = static_cast<std::size_t>(std::ceil(p / 100.0 * static_cast<double>(n)));
  rank = std::clamp<std::size_t>(rank, 1, n);
  return sorted[rank - 1];
}

DistStats compute_stats(const std::vector<std::int64_t> & latencies_ns)
{
  if (latencies_ns.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no samples to summarize");
  }
  std::vector<std::int64_t> sorted = latencies_ns;
  std::sort(sorted.begin(), sorted.end());

  DistStats s;
  s.min = sorted.front();
  s.max = sorted.back();
  s.p5 = percentile_sorted(sorted, 5);
  s.p25 = percentile_sorted(sorted, 25);
  s.median = percentile_sorted(sorted, 50);
  s.p75 = percentile_sorted(sorted, 75);
  s.p95 = percentile_sorted(sorted, 95);
  s.p99 = percentile_sorted(sorted, 99);

  double sum = 0.0;
  for (std::int64_t v : sorted) {
    sum += static_cast<double>(v);
  }
  s.mean = sum / static_cast<double>(sorted.size());
  double var = 0.0;
  for (std::int64_t v : sorted) {
    const double d = static_cast<double>(v) - s.mean;
    var += d * d;
  }
  s.stddev = std::sqrt(var / static_cast<double>(sorted.size()));
  return s;
}

}  // namespace ngbus::bench
