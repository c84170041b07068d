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

#ifndef NGBUS__DOMAIN_ID_HPP_
#define NGBUS__DOMAIN_ID_HPP_

#include <cstdint>

namespace ngbus {

/// Isolation namespace id. Participants in different domains never exchange
/// messages, even on identical topic names.
struct DomainId
{
  std::uint32_t id{0};

  friend bool operator==(const DomainId &, const DomainId &) = default;
  friend auto operator<=>(const DomainId &, const DomainId &) = default;
};

}  // namespace ngbus

#endif  // NGBUS__DOMAIN_ID_HPP_
