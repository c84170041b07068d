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

#ifndef NGBUS__INTER__SENDER_HPP_
#define NGBUS__INTER__SENDER_HPP_

#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>

#include "ngbus/inter/endpoint.hpp"
#include "ngbus/messages.hpp"

namespace ngbus::inter {

class Fd;

/// Publishing side of a loopback transport.
///
/// UDP endpoints send one datagram per frame, fire-and-forget. TCP endpoints
/// append length-delimited records to a stream; the connection is established
/// lazily on first send (the subscriber's listener may come up later) and
/// delivery is reliable and ordered per connection. Safe to call from
/// multiple threads.
class Sender
{
public:
  explicit Sender(
    Endpoint endpoint,
    std::chrono::milliseconds connect_timeout = std::chrono::seconds(10));
  ~Sender();

  Sender(const Sender &) = delete;
  Sender & operator=(const Sender &) = delete;

  /// Encodes, frames, and transmits one message.
  /// \throws Error{kPayloadTooLarge} (UDP, frame > 65507 bytes; large
  /// payloads must use a TCP endpoint), Error{kConnectionLost} (TCP).
  void send(std::uint64_t seq, const Payload & msg);

  /// Transmits pre-built frame bytes unchanged.
  void send_frame(std::span<const std::uint8_t> frame_bytes);

  const Endpoint & endpoint() const noexcept {return endpoint_;}

private:
  void transmit(std::span<const std::uint8_t> frame_bytes);

  Endpoint endpoint_;
  std::chrono::milliseconds connect_timeout_;
  std::mutex mutex_;
  std::unique_ptr<Fd> socket_;
};

}  // namespace ngbus::inter

#endif  // NGBUS__INTER__SENDER_HPP_
