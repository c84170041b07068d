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

#ifndef NGBUS__TIME_HPP_
#define NGBUS__TIME_HPP_

#include <cstdint>
#include <string>

namespace ngbus {

/// Wall-clock timestamp, signed nanoseconds since the Unix epoch.
///
/// Stamps are wall-clock on purpose: latency is measured between OS
/// processes on one host, and the wall clock is the only clock they share.
struct Time
{
  std::int64_t nanos{0};

  friend bool operator==(const Time &, const Time &) = default;
  friend auto operator<=>(const Time &, const Time &) = default;
};

/// Current wall-clock time. Non-decreasing between successive calls
/// within one process.
Time now();

/// Seconds as a double, for trigonometry on simulated signals.
inline double to_seconds(Time t) noexcept {return static_cast<double>(t.nanos) * 1e-9;}

/// RFC 3339 UTC rendering, second resolution: Time{0} -> "1970-01-01T00:00:00Z".
std::string to_rfc3339(Time t);

}  // namespace ngbus

#endif  // NGBUS__TIME_HPP_
