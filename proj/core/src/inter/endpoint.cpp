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

#include "ngbus/inter/endpoint.hpp"

#include <string>

#include "ngbus/errors.hpp"

namespace ngbus::inter {

std::uint16_t derive_port(DomainId domain, std::size_t topic_slot)
{
  const std::uint64_t port =
    20000ull + static_cast<std::uint64_t>(domain.id) * 8ull + topic_slot;
  if (port >= 65536ull) {
    throw Error(
      ErrorCode::kConfigInvalid,
      "derived port " + std::to_string(port) + " for domain " + std::to_string(domain.id) +
      " slot " + std::to_string(topic_slot) + " exceeds 65535");
  }
  return static_cast<std::uint16_t>(port);
}

}  // namespace ngbus::inter
