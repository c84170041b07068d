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

#ifndef NGBUS__PAYLOAD_DIAG_HPP_
#define NGBUS__PAYLOAD_DIAG_HPP_

#include <atomic>
#include <cstdint>

namespace ngbus {

/// Deep-copy counter attached to every message payload.
///
/// Starts at 0 on construction and is incremented exactly when the payload's
/// bytes are duplicated: copy-constructing a message bumps the copy's counter,
/// and the wire decoder bumps the message it materializes. Moving a message
/// transfers the counter unchanged. This is what makes the zero-copy claim of
/// the intra-process path assertable instead of inferred from timing.
class PayloadDiag
{
public:
  PayloadDiag() noexcept = default;

  PayloadDiag(const PayloadDiag & other) noexcept
  : count_(other.count_.load(std::memory_order_relaxed) + 1) {}

  PayloadDiag(PayloadDiag && other) noexcept
  : count_(other.count_.load(std::memory_order_relaxed)) {}

  PayloadDiag & operator=(const PayloadDiag & other) noexcept
  {
    if (this != &other) {
      count_.store(other.count_.load(std::memory_order_relaxed) + 1, std::memory_order_relaxed);
    }
    return *this;
  }

  PayloadDiag & operator=(PayloadDiag && other) noexcept
  {
    count_.store(other.count_.load(std::memory_order_relaxed), std::memory_order_relaxed);
    return *this;
  }

  /// Record one explicit byte duplication.
  void bump() const noexcept {count_.fetch_add(1, std::memory_order_relaxed);}

  std::uint64_t deep_copy_count() const noexcept
  {
    return count_.load(std::memory_order_relaxed);
  }

private:
  mutable std::atomic<std::uint64_t> count_{0};
};

}  // namespace ngbus

#endif  // NGBUS__PAYLOAD_DIAG_HPP_
