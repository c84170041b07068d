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

#include "ngbus/bench/collector.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ngbus/errors.hpp"

namespace ngbus::bench {

using nlohmann::json;

void SampleCollector::on_frame_processed(const nodes::LatencyObservation & obs)
{
  bool fire = false;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (completed_) {
      return;
    }
    outcome_.samples.push_back(LatencySample{obs.seq, obs.capture, obs.done});
    outcome_.image_deliveries++;
    outcome_.image_copy_total += obs.payload_copies;
    if (obs.domain != expected_domain_) {
      outcome_.cross_domain_surfaced++;
    }
    if (outcome_.samples.size() >= target_) {
      completed_ = true;
      fire = true;
    }
  }
  if (fire && on_complete_) {
    on_complete_();
  }
}

SinkOutcome SampleCollector::take_outcome()
{
  std::lock_guard<std::mutex> lock(mutex_);
  return std::move(outcome_);
}

std::uint64_t SampleCollector::collected() const
{
  std::lock_guard<std::mutex> lock(mutex_);
  return outcome_.samples.size();
}

void write_sink_meta(const SinkMeta & meta, const std::string & path)
{
  json j;
  j["format"] = "sink_meta_v1";
  j["collected"] = meta.collected;
  j["image_deliveries"] = meta.image_deliveries;
  j["image_copy_total"] = meta.image_copy_total;
  j["cross_domain_surfaced"] = meta.cross_domain_surfaced;
  j["wrong_domain"] = meta.wrong_domain;
  j["queue_full"] = meta.queue_full;
  j["malformed"] = meta.malformed;
  j["reached_target"] = meta.reached_target;
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kIoFailed, "cannot write sink meta to '" + path + "'");
  }
  out << j.dump(2) << '\n';
}

SinkMeta read_sink_meta(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoFailed, "cannot read sink meta from '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    const json j = json::parse(buf.str());
    SinkMeta meta;
    meta.collected = j.at("collected").get<std::uint64_t>();
    meta.image_deliveries = j.at("image_deliveries").get<std::uint64_t>();
    meta.image_copy_total = j.at("image_copy_total").get<std::uint64_t>();
    meta.cross_domain_surfaced = j.at("cross_domain_surfaced").get<std::uint64_t>();
    meta.wrong_domain = j.at("wrong_domain").get<std::uint64_t>();
    meta.queue_full = j.at("queue_full").get<std::uint64_t>();
    meta.malformed = j.at("malformed").get<std::uint64_t>();
    meta.reached_target = j.at("reached_target").get<bool>();
    return meta;
  } catch (const json::exception & e) {
    throw Error(ErrorCode::kIoFailed, std::string("sink meta JSON: ") + e.what());
  }
}

void write_sink_raw(const std::vector<LatencySample> & samples, const std::string & path)
{
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kIoFailed, "cannot write sink samples to '" + path + "'");
  }
  out << "seq,capture_ns,done_ns\n";
  for (const LatencySample & s : samples) {
    out << s.seq << ',' << s.capture_stamp.nanos << ',' << s.done_stamp.nanos << '\n';
  }
  if (!out) {
    throw Error(ErrorCode::kIoFailed, "short write to '" + path + "'");
  }
}

std::vector<LatencySample> read_sink_raw(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoFailed, "cannot read sink samples from '" + path + "'");
  }
  std::vector<LatencySample> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first || line.empty()) {
      first = false;
      continue;
    }
    LatencySample s;
    std::istringstream row(line);
    char comma = 0;
    row >> s.seq >> comma >> s.capture_stamp.nanos >> comma >> s.done_stamp.nanos;
    if (!row) {
      throw Error(ErrorCode::kIoFailed, "malformed sink row '" + line + "' in " + path);
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace ngbus::bench
