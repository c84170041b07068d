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

#include "ngbus/gc/bridge.hpp"

#include <poll.h>
#include <sys/socket.h>

#include <array>
#include <optional>

#include "ngbus/errors.hpp"
#include "ngbus/gc/codec.hpp"
#include "../inter/socket_util.hpp"

namespace ngbus::gc {

void bridge_run(
  std::uint16_t listen_port,
  const std::function<void(GameState)> & publish,
  const std::atomic<bool> & stop,
  BridgeStats & stats)
{
  inter::Fd sock = inter::udp_bind(listen_port);
  std::array<std::uint8_t, 2048> buf{};
  while (!stop.load(std::memory_order_relaxed)) {
    pollfd pfd{sock.get(), POLLIN, 0};
    if (::poll(&pfd, 1, 50) <= 0) {
      continue;
    }
    for (;;) {
      ssize_t n = ::recv(sock.get(), buf.data(), buf.size(), MSG_DONTWAIT);
      if (n < 0) {
        break;
      }
      std::optional<GameState> state;
      try {
        state = parse_gc_packet(std::span<const std::uint8_t>(buf.data(), n));
      } catch (const Error &) {
        stats.malformed.fetch_add(1, std::memory_order_relaxed);
        continue;
      }
      publish(std::move(*state));
      stats.published.fetch_add(1, std::memory_order_relaxed);
    }
  }
}

}  // namespace ngbus::gc
