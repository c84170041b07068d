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

#include "ngbus/graph/topology.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ngbus/errors.hpp"

namespace ngbus::graph {

using nlohmann::json;

const char * to_string(RunMode mode) noexcept
{
  switch (mode) {
    case RunMode::kStandalone: return "standalone";
    case RunMode::kComposedNoIpc: return "composed-noipc";
    case RunMode::kComposedIpc: return "composed-ipc";
  }
  return "unknown";
}

RunMode parse_run_mode(const std::string & text)
{
  if (text == "standalone") {return RunMode::kStandalone;}
  if (text == "composed-noipc") {return RunMode::kComposedNoIpc;}
  if (text == "composed-ipc") {return RunMode::kComposedIpc;}
  throw Error(ErrorCode::kConfigInvalid, "unknown run mode '" + text + "'");
}

void Topology::validate() const
{
  if (scenario.empty()) {
    throw Error(ErrorCode::kConfigInvalid, "scenario name is empty");
  }
  std::set<std::string> node_names;
  for (const NodeSpec & n : nodes) {
    if (n.name.empty()) {
      throw Error(ErrorCode::kConfigInvalid, "node with empty name");
    }
    if (!node_names.insert(n.name).second) {
      throw Error(ErrorCode::kConfigInvalid, "duplicate node name '" + n.name + "'");
    }
  }
  std::set<std::string> topic_names;
  std::set<std::size_t> slots;
  for (const TopicSpec & t : topics) {
    if (!topic_names.insert(t.name.str()).second) {
      throw Error(ErrorCode::kConfigInvalid, "duplicate topic '" + t.name.str() + "'");
    }
    if (!slots.insert(t.slot).second) {
      throw Error(
        ErrorCode::kConfigInvalid, "duplicate topic slot " + std::to_string(t.slot));
    }
    if (t.qos.history_depth < 1) {
      throw Error(
        ErrorCode::kConfigInvalid, "history depth 0 on topic '" + t.name.str() + "'");
    }
  }
  for (std::size_t i = 0; i < topics.size(); ++i) {
    if (!slots.count(i)) {
      throw Error(
        ErrorCode::kConfigInvalid,
        "topic slots are not dense: missing slot " + std::to_string(i));
    }
  }
  for (const std::string & t : ipc_topics) {
    if (!topic_names.count(t)) {
      throw Error(ErrorCode::kConfigInvalid, "ipc topic '" + t + "' is not declared");
    }
  }
  if (executor.kind == ExecutorKind::kMultiThreaded && executor.threads == 0) {
    throw Error(ErrorCode::kConfigInvalid, "multi-threaded executor with 0 threads");
  }
}

const TopicSpec & Topology::topic(const std::string & name) const
{
  if (const TopicSpec * t = find_topic(name)) {
    return *t;
  }
  throw Error(ErrorCode::kConfigInvalid, "topic '" + name + "' is not declared");
}

const TopicSpec * Topology::find_topic(const std::string & name) const noexcept
{
  auto it = std::find_if(
    topics.begin(), topics.end(),
    [&name](const TopicSpec & t) {return t.name.str() == name;});
  return it == topics.end() ? nullptr : &*it;
}

const NodeSpec & Topology::node(const std::string & name) const
{
  auto it = std::find_if(
    nodes.begin(), nodes.end(), [&name](const NodeSpec & n) {return n.name == name;});
  if (it == nodes.end()) {
    throw Error(ErrorCode::kConfigInvalid, "node '" + name + "' is not declared");
  }
  return *it;
}

bool Topology::ipc_enabled(const TopicName & name) const noexcept
{
  return std::find(ipc_topics.begin(), ipc_topics.end(), name.str()) != ipc_topics.end();
}

std::string Topology::to_json_string() const
{
  json j;
  j["format"] = "topology_v1";
  j["scenario"] = scenario;
  j["domain"] = domain.id;
  j["mode"] = to_string(mode);
  j["executor"] = {
    {"kind", executor.kind == ExecutorKind::kSingleThreaded ? "single" : "multi"},
    {"threads", executor.threads},
  };
  j["sample_target"] = sample_target;
  j["warmup_discard"] = warmup_discard;
  j["seed"] = seed;
  j["gc_port"] = gc_port;
  j["out_dir"] = out_dir;
  j["ipc_topics"] = ipc_topics;
  j["topics"] = json::array();
  for (const TopicSpec & t : topics) {
    j["topics"].push_back(
      {
        {"name", t.name.str()},
        {"type", to_string(t.type)},
        {"qos", {
          {"reliability", t.qos.reliability == Reliability::kReliable ? "reliable" : "best-effort"},
          {"depth", t.qos.history_depth},
        }},
        {"slot", t.slot},
      });
  }
  j["nodes"] = json::array();
  for (const NodeSpec & n : nodes) {
    j["nodes"].push_back({{"name", n.name}, {"kind", n.kind}, {"params", n.params}});
  }
  return j.dump(2);
}

Topology Topology::from_json_string(const std::string & text)
{
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception & e) {
    throw Error(ErrorCode::kConfigInvalid, std::string("topology JSON: ") + e.what());
  }
  try {
    if (j.value("format", "") != std::string("topology_v1")) {
      throw Error(
        ErrorCode::kConfigInvalid,
        "unsupported topology format '" + j.value("format", "") + "'");
    }
    Topology topo;
    topo.scenario = j.at("scenario").get<std::string>();
    topo.domain = DomainId{j.at("domain").get<std::uint32_t>()};
    topo.mode = parse_run_mode(j.at("mode").get<std::string>());
    const json & ex = j.at("executor");
    const std::string kind = ex.at("kind").get<std::string>();
    if (kind == "single") {
      topo.executor.kind = ExecutorKind::kSingleThreaded;
    } else if (kind == "multi") {
      topo.executor.kind = ExecutorKind::kMultiThreaded;
    } else {
      throw Error(ErrorCode::kConfigInvalid, "unknown executor kind '" + kind + "'");
    }
    topo.executor.threads = ex.value("threads", 1u);
    topo.sample_target = j.value("sample_target", std::uint64_t{0});
    topo.warmup_discard = j.value("warmup_discard", std::uint64_t{0});
    topo.seed = j.value("seed", 0u);
    topo.gc_port = j.value("gc_port", std::uint16_t{3838});
    topo.out_dir = j.value("out_dir", "");
    topo.ipc_topics = j.value("ipc_topics", std::vector<std::string>{});
    for (const std::string & t : topo.ipc_topics) {
      TopicName::validate(t);
    }
    for (const json & jt : j.at("topics")) {
      TopicSpec t{
        TopicName::validate(jt.at("name").get<std::string>()),
        parse_payload_type(jt.at("type").get<std::string>()),
        QoSProfile{},
        jt.at("slot").get<std::size_t>(),
      };
      const json & q = jt.at("qos");
      const std::string rel = q.at("reliability").get<std::string>();
      if (rel == "reliable") {
        t.qos.reliability = Reliability::kReliable;
      } else if (rel == "best-effort") {
        t.qos.reliability = Reliability::kBestEffort;
      } else {
        throw Error(ErrorCode::kConfigInvalid, "unknown reliability '" + rel + "'");
      }
      t.qos.history_depth = q.at("depth").get<std::size_t>();
      topo.topics.push_back(std::move(t));
    }
    for (const json & jn : j.at("nodes")) {
      NodeSpec n;
      n.name = jn.at("name").get<std::string>();
      n.kind = jn.at("kind").get<std::string>();
      if (jn.contains("params")) {
        for (auto it = jn["params"].begin(); it != jn["params"].end(); ++it) {
          n.params[it.key()] = it.value().get<double>();
        }
      }
      topo.nodes.push_back(std::move(n));
    }
    topo.validate();
    return topo;
  } catch (const json::exception & e) {
    throw Error(ErrorCode::kConfigInvalid, std::string("topology JSON: ") + e.what());
  }
}

void Topology::save(const std::string & path) const
{
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kIoFailed, "cannot write topology to '" + path + "'");
  }
  out << to_json_string() << '\n';
}

Topology Topology::load(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoFailed, "cannot read topology from '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_string(buf.str());
}

void apply_domain_override(Topology & topo)
{
  if (const char * env = std::getenv(kDomainEnvVar)) {
    try {
      topo.domain = DomainId{static_cast<std::uint32_t>(std::stoul(env))};
    } catch (const std::exception &) {
      throw Error(
        ErrorCode::kConfigInvalid, std::string(kDomainEnvVar) + "='" + env + "' is not a number");
    }
  }
}

}  // namespace ngbus::graph
