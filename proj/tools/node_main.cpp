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

// ngb-node: runs a single topology node as its own OS process (stand-alone
// execution). The topology file is the sole positional argument; --node
// selects which declared node this process embodies. NGB_DOMAIN overrides
// the topology's domain id.

#include <cstdio>
#include <filesystem>
#include <string>

#include <CLI11.hpp>

#include "ngbus/bench/collector.hpp"
#include "ngbus/errors.hpp"
#include "ngbus/graph/container.hpp"
#include "ngbus/graph/topology.hpp"
#include "ngbus/nodes/graph_builder.hpp"

namespace {

int run_node(const std::string & topology_path, const std::string & node_name)
{
  namespace fs = std::filesystem;
  using namespace ngbus;

  graph::Topology topo = graph::Topology::load(topology_path);
  graph::apply_domain_override(topo);
  const graph::NodeSpec & spec = topo.node(node_name);

  graph::install_signal_handlers();
  graph::Container container(graph::options_from(topo));

  const bool is_sink = spec.kind == "sobel_sink";
  bench::SampleCollector collector(
    topo.domain, topo.warmup_discard + topo.sample_target,
    [&container] {container.request_shutdown();});

  nodes::build_node(
    container.add_node(spec.name), spec, topo, is_sink ? &collector : nullptr);
  container.spin();

  if (is_sink && !topo.out_dir.empty()) {
    fs::create_directories(topo.out_dir);
    bench::SinkOutcome outcome = collector.take_outcome();
    bench::SinkMeta meta;
    meta.collected = outcome.samples.size();
    meta.image_deliveries = outcome.image_deliveries;
    meta.image_copy_total = outcome.image_copy_total;
    meta.cross_domain_surfaced = outcome.cross_domain_surfaced;
    const auto counters =
      container.receive_counters(TopicName::validate(nodes::kTopicImageRaw));
    meta.wrong_domain = counters.wrong_domain;
    meta.queue_full = counters.queue_full;
    meta.malformed = counters.malformed;
    meta.reached_target =
      outcome.samples.size() >= topo.warmup_discard + topo.sample_target;
    const fs::path dir(topo.out_dir);
    bench::write_sink_raw(outcome.samples, (dir / "sink_raw.csv").string());
    bench::write_sink_meta(meta, (dir / "sink_meta.json").string());
  }
  return 0;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"ngbus node process"};
  std::string topology_path;
  std::string node_name;
  app.add_option("topology", topology_path, "topology_v1 JSON file")->required();
  app.add_option("--node", node_name, "name of the node to run")->required();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    return app.exit(e) == 0 ? 0 : 3;
  }
  try {
    return run_node(topology_path, node_name);
  } catch (const std::exception & e) {
    std::fprintf(stderr, "ngb-node[%s]: %s\n", node_name.c_str(), e.what());
    return 3;
  }
}
