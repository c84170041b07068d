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

#include "ngbus/bench/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ngbus/errors.hpp"

namespace ngbus::bench {

using nlohmann::json;

namespace {

json stats_to_json(const DistStats & s)
{
  return json{
    {"min", s.min}, {"p5", s.p5}, {"p25", s.p25}, {"median", s.median},
    {"p75", s.p75}, {"p95", s.p95}, {"p99", s.p99}, {"max", s.max},
    {"mean", s.mean}, {"stddev", s.stddev},
  };
}

DistStats stats_from_json(const json & j)
{
  DistStats s;
  s.min = j.at("min").get<std::int64_t>();
  s.p5 = j.at("p5").get<std::int64_t>();
  s.p25 = j.at("p25").get<std::int64_t>();
  s.median = j.at("median").get<std::int64_t>();
  s.p75 = j.at("p75").get<std::int64_t>();
  s.p95 = j.at("p95").get<std::int64_t>();
  s.p99 = j.at("p99").get<std::int64_t>();
  s.max = j.at("max").get<std::int64_t>();
  s.mean = j.at("mean").get<double>();
  s.stddev = j.at("stddev").get<double>();
  return s;
}

}  // namespace

std::string to_json_string(const BenchReport & r)
{
  json j;
  j["scenario"] = r.scenario;
  j["mode"] = r.mode;
  j["sample_count"] = r.sample_count;
  j["discarded_warmup"] = r.discarded_warmup;
  j["anomalies"] = r.anomalies;
  j["stats"] = stats_to_json(r.stats);
  j["diagnostics"] = {
    {"image_deliveries", r.diagnostics.image_deliveries},
    {"image_copy_total", r.diagnostics.image_copy_total},
    {"cross_domain_surfaced", r.diagnostics.cross_domain_surfaced},
    {"wrong_domain", r.diagnostics.wrong_domain},
    {"queue_full", r.diagnostics.queue_full},
    {"malformed", r.diagnostics.malformed},
  };
  j["config"] = {
    {"topology", json::parse(r.topology_json.empty() ? "{}" : r.topology_json)},
    {"resolution", {r.width, r.height}},
    {"fps", r.fps},
    {"threads", r.threads},
    {"image_qos", r.image_qos},
    {"seed", r.seed},
  };
  j["environment"] = {
    {"host", r.host},
    {"cpu_count", r.cpu_count},
    {"timestamp", r.timestamp},
  };
  return j.dump(2);
}

BenchReport report_from_json_string(const std::string & text)
{
  try {
    const json j = json::parse(text);
    BenchReport r;
    r.scenario = j.at("scenario").get<std::string>();
    r.mode = j.at("mode").get<std::string>();
    r.sample_count = j.at("sample_count").get<std::uint64_t>();
    r.discarded_warmup = j.at("discarded_warmup").get<std::uint64_t>();
    r.anomalies = j.at("anomalies").get<std::uint64_t>();
    r.stats = stats_from_json(j.at("stats"));
    const json & d = j.at("diagnostics");
    r.diagnostics.image_deliveries = d.at("image_deliveries").get<std::uint64_t>();
    r.diagnostics.image_copy_total = d.at("image_copy_total").get<std::uint64_t>();
    r.diagnostics.cross_domain_surfaced = d.at("cross_domain_surfaced").get<std::uint64_t>();
    r.diagnostics.wrong_domain = d.at("wrong_domain").get<std::uint64_t>();
    r.diagnostics.queue_full = d.at("queue_full").get<std::uint64_t>();
    r.diagnostics.malformed = d.at("malformed").get<std::uint64_t>();
    const json & c = j.at("config");
    r.topology_json = c.at("topology").dump();
    r.width = c.at("resolution").at(0).get<std::uint32_t>();
    r.height = c.at("resolution").at(1).get<std::uint32_t>();
    r.fps = c.at("fps").get<double>();
    r.threads = c.at("threads").get<unsigned>();
    r.image_qos = c.at("image_qos").get<std::string>();
    r.seed = c.at("seed").get<std::uint32_t>();
    const json & e = j.at("environment");
    r.host = e.at("host").get<std::string>();
    r.cpu_count = e.at("cpu_count").get<unsigned>();
    r.timestamp = e.at("timestamp").get<std::string>();
    return r;
  } catch (const json::exception & ex) {
    throw Error(ErrorCode::kConfigInvalid, std::string("report JSON: ") + ex.what());
  }
}

void write_report(const BenchReport & report, const std::string & path)
{
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kIoFailed, "cannot write report to '" + path + "'");
  }
  out << to_json_string(report) << '\n';
  if (!out) {
    throw Error(ErrorCode::kIoFailed, "short write to '" + path + "'");
  }
}

BenchReport read_report(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoFailed, "cannot read report from '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return report_from_json_string(buf.str());
}

void write_samples_csv(const std::vector<LatencySample> & samples, const std::string & path)
{
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kIoFailed, "cannot write samples to '" + path + "'");
  }
  out << "seq,latency_ns\n";
  for (const LatencySample & s : samples) {
    out << s.seq << ',' << s.latency_ns() << '\n';
  }
  if (!out) {
    throw Error(ErrorCode::kIoFailed, "short write to '" + path + "'");
  }
}

std::vector<std::int64_t> read_samples_csv_latencies(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoFailed, "cannot read samples from '" + path + "'");
  }
  std::string line;
  std::vector<std::int64_t> out;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      first = false;  // header
      continue;
    }
    if (line.empty()) {
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorCode::kIoFailed, "malformed csv row '" + line + "' in " + path);
    }
    out.push_back(std::stoll(line.substr(comma + 1)));
  }
  if (out.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no samples in '" + path + "'");
  }
  return out;
}

void write_plotdata(const std::vector<std::int64_t> & latencies_ns, const std::string & path)
{
  if (latencies_ns.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no samples for plotdata");
  }
  std::vector<std::int64_t> sorted = latencies_ns;
  std::sort(sorted.begin(), sorted.end());
  const double p1 = static_cast<double>(percentile_sorted(sorted, 1));
  const double p99 = static_cast<double>(percentile_sorted(sorted, 99));

  constexpr int kBins = 100;
  std::vector<std::uint64_t> bins(kBins, 0);
  const double span = p99 - p1;
  for (std::int64_t v : sorted) {
    const double x = static_cast<double>(v);
    if (x < p1 || x > p99) {
      continue;
    }
    int idx = span <= 0.0 ?
      0 : static_cast<int>((x - p1) / span * kBins);
    idx = std::min(idx, kBins - 1);
    bins[static_cast<std::size_t>(idx)]++;
  }

  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kIoFailed, "cannot write plotdata to '" + path + "'");
  }
  out << "# histogram bins=" << kBins << " lo_ns=" << static_cast<std::int64_t>(p1)
      << " hi_ns=" << static_cast<std::int64_t>(p99) << '\n';
  out << "# bin_lo_ns bin_hi_ns count\n";
  for (int i = 0; i < kBins; ++i) {
    const double lo = p1 + span * i / kBins;
    const double hi = p1 + span * (i + 1) / kBins;
    out << static_cast<std::int64_t>(lo) << ' ' << static_cast<std::int64_t>(hi) << ' '
        << bins[static_cast<std::size_t>(i)] << '\n';
  }
  const DistStats s = compute_stats(sorted);
  out << "# boxplot min p25 median p75 max\n";
  out << s.min << ' ' << s.p25 << ' ' << s.median << ' ' << s.p75 << ' ' << s.max << '\n';
  if (!out) {
    throw Error(ErrorCode::kIoFailed, "short write to '" + path + "'");
  }
}

}  // namespace ngbus::bench
