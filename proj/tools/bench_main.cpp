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

// bench: runs the camera/Sobel latency scenarios in stand-alone, composed
// (loopback) and composed (intra-process) modes, and summarizes the results.
//
// Exit codes: 0 success, 2 ordering assertion failed, 3 runtime error.

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ngbus/bench/compare.hpp"
#include "ngbus/bench/report.hpp"
#include "ngbus/bench/runner.hpp"
#include "ngbus/bench/stats.hpp"
#include "ngbus/errors.hpp"
#include "ngbus/graph/container.hpp"

namespace {

using namespace ngbus;

constexpr int kExitOk = 0;
constexpr int kExitAssertFailed = 2;
constexpr int kExitRuntime = 3;

std::vector<bench::BenchReport> load_reports(const std::string & dir)
{
  namespace fs = std::filesystem;
  std::vector<bench::BenchReport> reports;
  if (!fs::is_directory(dir)) {
    throw Error(ErrorCode::kIoFailed, "'" + dir + "' is not a directory");
  }
  std::vector<fs::path> entries;
  for (const auto & entry : fs::directory_iterator(dir)) {
    entries.push_back(entry.path());
  }
  std::sort(entries.begin(), entries.end());
  for (const fs::path & p : entries) {
    const fs::path report = p / "report.json";
    if (fs::is_regular_file(report)) {
      reports.push_back(bench::read_report(report.string()));
    }
  }
  if (reports.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no */report.json under '" + dir + "'");
  }
  return reports;
}

int assert_ordering(const std::string & base_dir, const std::string & scenario)
{
  std::vector<bench::BenchReport> reports;
  for (const bench::BenchReport & r : load_reports(base_dir)) {
    if (r.scenario == scenario) {
      reports.push_back(r);
    }
  }
  if (reports.size() < 3) {
    std::printf(
      "ordering assertion: only %zu %s report(s) under %s yet, nothing to assert\n",
      reports.size(), scenario.c_str(), base_dir.c_str());
    return kExitOk;
  }
  const bench::Comparison cmp = bench::compare(reports);
  std::fputs(bench::render_table(cmp).c_str(), stdout);
  if (cmp.ordering_ok.has_value() && !*cmp.ordering_ok) {
    return kExitAssertFailed;
  }
  return kExitOk;
}

int cmd_run(
  bench::RunOptions opts, const std::string & out_base, bool do_assert_ordering)
{
  namespace fs = std::filesystem;
  graph::install_signal_handlers();
  const std::string scenario = opts.case_id == 1 ? "case1" : "case2";
  opts.out_dir =
    (fs::path(out_base) / (scenario + "_" + graph::to_string(opts.mode))).string();

  std::printf(
    "running %s %s: %llu samples (+%llu warmup) at %.3g fps, %ux%u\n",
    scenario.c_str(), graph::to_string(opts.mode),
    static_cast<unsigned long long>(opts.samples),
    static_cast<unsigned long long>(opts.warmup),
    opts.fps, opts.width, opts.height);
  std::fflush(stdout);

  const bench::BenchReport report = bench::run_case(opts);
  std::printf(
    "%s %s: median %.3f ms, IQR %.3f ms, mean %.3f ms over %llu samples "
    "(copies/image %.2f) -> %s\n",
    report.scenario.c_str(), report.mode.c_str(),
    static_cast<double>(report.stats.median) / 1e6,
    static_cast<double>(report.stats.iqr()) / 1e6,
    report.stats.mean / 1e6,
    static_cast<unsigned long long>(report.sample_count),
    report.diagnostics.image_deliveries == 0 ? 0.0 :
    static_cast<double>(report.diagnostics.image_copy_total) /
    static_cast<double>(report.diagnostics.image_deliveries),
    opts.out_dir.c_str());

  if (do_assert_ordering) {
    return assert_ordering(out_base, scenario);
  }
  return kExitOk;
}

int cmd_compare(const std::string & dir, bool do_assert_ordering)
{
  const bench::Comparison cmp = bench::compare(load_reports(dir));
  std::fputs(bench::render_table(cmp).c_str(), stdout);
  if (do_assert_ordering && (!cmp.ordering_ok.has_value() || !*cmp.ordering_ok)) {
    return kExitAssertFailed;
  }
  return kExitOk;
}

int cmd_stats(const std::string & csv_path)
{
  const std::vector<std::int64_t> latencies = bench::read_samples_csv_latencies(csv_path);
  const bench::DistStats s = bench::compute_stats(latencies);
  std::printf("samples: %zu\n", latencies.size());
  std::printf("min:    %12lld ns\n", static_cast<long long>(s.min));
  std::printf("p5:     %12lld ns\n", static_cast<long long>(s.p5));
  std::printf("p25:    %12lld ns\n", static_cast<long long>(s.p25));
  std::printf("median: %12lld ns\n", static_cast<long long>(s.median));
  std::printf("p75:    %12lld ns\n", static_cast<long long>(s.p75));
  std::printf("p95:    %12lld ns\n", static_cast<long long>(s.p95));
  std::printf("p99:    %12lld ns\n", static_cast<long long>(s.p99));
  std::printf("max:    %12lld ns\n", static_cast<long long>(s.max));
  std::printf("mean:   %15.2f ns\n", s.mean);
  std::printf("stddev: %15.2f ns\n", s.stddev);
  return kExitOk;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"ngbus latency benchmark harness"};
  app.require_subcommand(1);

  // run
  auto * run = app.add_subcommand("run", "execute one scenario in one mode");
  bench::RunOptions opts;
  std::string mode_text = "composed-ipc";
  std::string image_qos_text = "reliable";
  std::string out_base = "bench_out";
  std::uint32_t domain_id = 0;
  bool run_assert_ordering = false;
  run->add_option("--case", opts.case_id, "scenario: 1 (camera+sobel) or 2 (7-node graph)")
  ->required()->check(CLI::Range(1, 2));
  run->add_option("--mode", mode_text, "standalone | composed-noipc | composed-ipc")
  ->required();
  run->add_option("--samples", opts.samples, "post-warmup samples to collect")->required();
  run->add_option("--width", opts.width, "camera frame width [640]");
  run->add_option("--height", opts.height, "camera frame height [480]");
  run->add_option("--fps", opts.fps, "camera rate [30]");
  run->add_option("--image-qos", image_qos_text, "reliable | best-effort [reliable]");
  run->add_option("--threads", opts.threads, "composed executor threads [min(cpus,4)]");
  run->add_option("--seed", opts.seed, "deterministic frame/noise seed [42]");
  run->add_option("--warmup", opts.warmup, "leading samples to discard [100]");
  run->add_option("--out", out_base, "output directory [bench_out]");
  run->add_option("--domain", domain_id, "domain id [0]");
  run->add_option("--gc-port", opts.gc_port, "GameController UDP port [3838]");
  run->add_option("--node-binary", opts.node_binary, "ngb-node path [beside bench]");
  run->add_flag(
    "--assert-ordering", run_assert_ordering,
    "after the run, exit 2 unless median(ipc) <= others across sibling runs");

  // compare
  auto * comp = app.add_subcommand("compare", "summarize runs under a directory");
  std::string compare_dir;
  bool compare_assert_ordering = false;
  comp->add_option("dir", compare_dir, "directory holding <run>/report.json entries")
  ->required();
  comp->add_flag(
    "--assert-ordering", compare_assert_ordering,
    "exit 2 unless median(ipc) <= median(noipc) and median(ipc) <= median(standalone)");

  // stats
  auto * stats = app.add_subcommand("stats", "distribution summary of a samples.csv");
  std::string csv_path;
  stats->add_option("csv", csv_path, "samples.csv file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitRuntime;
  }

  try {
    if (run->parsed()) {
      opts.mode = graph::parse_run_mode(mode_text);
      if (image_qos_text == "reliable") {
        opts.image_qos = Reliability::kReliable;
      } else if (image_qos_text == "best-effort") {
        opts.image_qos = Reliability::kBestEffort;
      } else {
        throw Error(ErrorCode::kConfigInvalid, "--image-qos '" + image_qos_text + "'");
      }
      opts.domain = DomainId{domain_id};
      return cmd_run(opts, out_base, run_assert_ordering);
    }
    if (comp->parsed()) {
      return cmd_compare(compare_dir, compare_assert_ordering);
    }
    return cmd_stats(csv_path);
  } catch (const std::exception & e) {
    std::fprintf(stderr, "bench: %s\n", e.what());
    return kExitRuntime;
  }
}
