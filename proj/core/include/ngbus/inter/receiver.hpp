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

#ifndef NGBUS__INTER__RECEIVER_HPP_
#define NGBUS__INTER__RECEIVER_HPP_

#include <chrono>
#include <deque>
#include <memory>
#include <optional>
#include <vector>

#include "ngbus/inter/endpoint.hpp"
#include "ngbus/inter/record_stream.hpp"
#include "ngbus/wire/codec.hpp"

namespace ngbus::inter {

class Fd;

/// Receiving side of a loopback transport, bound at construction.
///
/// Every surfaced frame parses cleanly and carries this endpoint's domain id.
/// Frames from other domains are counted in wrong_domain and never surfaced;
/// unparseable bytes and mid-record disconnects are counted in malformed.
/// A Receiver is owned by a single reader thread.
class Receiver
{
public:
  /// Binds (UDP) or listens (TCP) on the endpoint's derived port.
  /// \throws Error{kBindFailed}.
  explicit Receiver(Endpoint endpoint);
  ~Receiver();

  Receiver(const Receiver &) = delete;
  Receiver & operator=(const Receiver &) = delete;

  /// Next surfaced frame, waiting up to `timeout` for traffic.
  std::optional<wire::WireFrame> poll(std::chrono::milliseconds timeout);

  DropCounters & counters() noexcept {return counters_;}
  const Endpoint & endpoint() const noexcept {return endpoint_;}

private:
  void pump(std::chrono::milliseconds timeout);
  void pump_udp(std::chrono::milliseconds timeout);
  void pump_tcp(std::chrono::milliseconds timeout);
  void handle_frame_bytes(std::span<const std::uint8_t> bytes);

  struct Conn
  {
    std::unique_ptr<Fd> fd;
    RecordStream stream;
  };

  Endpoint endpoint_;
  std::unique_ptr<Fd> socket_;
  std::vector<Conn> conns_;
  std::deque<wire::WireFrame> pending_;
  DropCounters counters_;
  std::vector<std::uint8_t> read_buf_;
};

}  // namespace ngbus::inter

#endif  // NGBUS__INTER__RECEIVER_HPP_
