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

#include "ngbus/inter/sender.hpp"

#include <string>
#include <vector>

#include "ngbus/errors.hpp"
#include "ngbus/wire/codec.hpp"
#include "socket_util.hpp"

namespace ngbus::inter {

Sender::Sender(Endpoint endpoint, std::chrono::milliseconds connect_timeout)
: endpoint_(std::move(endpoint)), connect_timeout_(connect_timeout)
{
}

Sender::~Sender() = default;

void Sender::send(std::uint64_t seq, const Payload & msg)
{
  std::vector<std::uint8_t> payload = wire::encode_payload(msg);
  std::vector<std::uint8_t> bytes = wire::frame(
    endpoint_.domain, endpoint_.topic, seq,
    static_cast<std::uint8_t>(payload_type_of(msg)), payload);
  transmit(bytes);
}

void Sender::send_frame(std::span<const std::uint8_t> frame_bytes)
{
  transmit(frame_bytes);
}

void Sender::transmit(std::span<const std::uint8_t> frame_bytes)
{
  if (endpoint_.kind == TransportKind::kUdpBestEffort &&
    frame_bytes.size() > kMaxUdpDatagram)
  {
    throw Error(
      ErrorCode::kPayloadTooLarge,
      "frame of " + std::to_string(frame_bytes.size()) + " bytes exceeds the " +
      std::to_string(kMaxUdpDatagram) + "-byte UDP datagram limit on topic " +
      endpoint_.topic.str());
  }
  std::lock_guard<std::mutex> lock(mutex_);
  if (endpoint_.kind == TransportKind::kUdpBestEffort) {
    if (!socket_) {
      socket_ = std::make_unique<Fd>(udp_socket());
    }
    udp_send_to(*socket_, endpoint_.port, frame_bytes.data(), frame_bytes.size());
    return;
  }
  if (!socket_) {
    socket_ = std::make_unique<Fd>(tcp_connect_retry(endpoint_.port, connect_timeout_));
  }
  std::uint8_t len_prefix[4];
  const std::uint32_t len = static_cast<std::uint32_t>(frame_bytes.size());
  for (int i = 0; i < 4; ++i) {
    len_prefix[i] = static_cast<std::uint8_t>(len >> (8 * i));
  }
  write_all(*socket_, len_prefix, 4);
  write_all(*socket_, frame_bytes.data(), frame_bytes.size());
}

}  // namespace ngbus::inter
