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

#ifndef NGBUS__GC__BRIDGE_HPP_
#define NGBUS__GC__BRIDGE_HPP_

#include <atomic>
#include <cstdint>
#include <functional>

#include "ngbus/messages.hpp"

namespace ngbus::gc {

struct BridgeStats
{
  std::atomic<std::uint64_t> published{0};
  std::atomic<std::uint64_t> malformed{0};
};

/// Listens for GameController broadcast packets on UDP `listen_port` until
/// `stop` becomes true. Every valid packet is handed to `publish` in arrival
/// order (duplicate packet_number values included; dedup is the consumer's
/// concern). Malformed packets are counted, never published.
/// \throws Error{kBindFailed} when the port cannot be bound.
void bridge_run(
  std::uint16_t listen_port,
  const std::function<void(GameState)> & publish,
  const std::atomic<bool> & stop,
  BridgeStats & stats);

}  // namespace ngbus::gc

#endif  // NGBUS__GC__BRIDGE_HPP_
