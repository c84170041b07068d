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

#ifndef NGBUS__INTER__ENDPOINT_HPP_
#define NGBUS__INTER__ENDPOINT_HPP_

#include <atomic>
#include <cstdint>

#include "ngbus/domain_id.hpp"
#include "ngbus/topic_name.hpp"

namespace ngbus::inter {

enum class TransportKind
{
  kUdpBestEffort,
  kTcpReliable,
};

/// Largest UDP payload that fits a single IPv4 datagram.
inline constexpr std::size_t kMaxUdpDatagram = 65507;

/// Receive-side failure counters. All failures on the receive path are
/// observable only here; none are surfaced as frames.
struct DropCounters
{
  std::atomic<std::uint64_t> wrong_domain{0};
  std::atomic<std::uint64_t> queue_full{0};
  std::atomic<std::uint64_t> malformed{0};
};

/// Deterministic port law replacing network discovery: wiring is fully
/// determined by (domain, topic slot), so benchmark runs need no handshake.
/// \throws Error{kConfigInvalid} when the derived port would exceed 65535.
std::uint16_t derive_port(DomainId domain, std::size_t topic_slot);

/// One side of a loopback transport for a single topic.
struct Endpoint
{
  DomainId domain;
  TopicName topic;
  TransportKind kind;
  std::uint16_t port;

  Endpoint(DomainId domain_in, TopicName topic_in, TransportKind kind_in, std::size_t topic_slot)
  : domain(domain_in), topic(std::move(topic_in)), kind(kind_in),
    port(derive_port(domain_in, topic_slot)) {}
};

}  // namespace ngbus::inter

#endif  // NGBUS__INTER__ENDPOINT_HPP_
