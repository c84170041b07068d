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

#ifndef NGBUS__BENCH__COLLECTOR_HPP_
#define NGBUS__BENCH__COLLECTOR_HPP_

#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "ngbus/bench/stats.hpp"
#include "ngbus/domain_id.hpp"
#include "ngbus/nodes/graph_builder.hpp"

namespace ngbus::bench {

/// Everything the measuring sink learned during a run.
struct SinkOutcome
{
  std::vector<LatencySample> samples;
  std::uint64_t image_deliveries{0};
  std::uint64_t image_copy_total{0};
  std::uint64_t cross_domain_surfaced{0};
};

/// Collects sink observations until `target` of them have arrived, then
/// fires `on_complete` (once). Thread-safe.
class SampleCollector : public nodes::SinkObserver
{
public:
  SampleCollector(DomainId expected_domain, std::uint64_t target, std::function<void()> on_complete)
  : expected_domain_(expected_domain), target_(target), on_complete_(std::move(on_complete)) {}

  void on_frame_processed(const nodes::LatencyObservation & obs) override;

  SinkOutcome take_outcome();
  std::uint64_t collected() const;

private:
  DomainId expected_domain_;
  std::uint64_t target_;
  std::function<void()> on_complete_;
  mutable std::mutex mutex_;
  SinkOutcome outcome_;
  bool completed_{false};
};

/// sink_meta_v1: the sink-side run summary a standalone sink process leaves
/// next to its raw sample file for the supervising harness.
struct SinkMeta
{
  std::uint64_t collected{0};
  std::uint64_t image_deliveries{0};
  std::uint64_t image_copy_total{0};
  std::uint64_t cross_domain_surfaced{0};
  std::uint64_t wrong_domain{0};
  std::uint64_t queue_full{0};
  std::uint64_t malformed{0};
  bool reached_target{false};
};

void write_sink_meta(const SinkMeta & meta, const std::string & path);
SinkMeta read_sink_meta(const std::string & path);

/// sink raw rows: "seq,capture_ns,done_ns" per observation, in order.
void write_sink_raw(const std::vector<LatencySample> & samples, const std::string & path);
std::vector<LatencySample> read_sink_raw(const std::string & path);

}  // namespace ngbus::bench

#endif  // NGBUS__BENCH__COLLECTOR_HPP_
