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

#include "ngbus/time.hpp"

#include <atomic>
#include <cstdio>
#include <ctime>

namespace ngbus {

namespace {
// CLOCK_REALTIME may step backwards (NTP). Successive now() calls within one
// process must still be non-decreasing, so remember the last value handed out.
std::atomic<std::int64_t> g_last_nanos{0};
}  // namespace

Time now()
{
  timespec ts{};
  clock_gettime(CLOCK_REALTIME, &ts);
  std::int64_t nanos = static_cast<std::int64_t>(ts.tv_sec) * 1000000000LL + ts.tv_nsec;
  std::int64_t prev = g_last_nanos.load(std::memory_order_relaxed);
  while (nanos > prev) {
    if (g_last_nanos.compare_exchange_weak(prev, nanos, std::memory_order_relaxed)) {
      return Time{nanos};
    }
  }
  return Time{prev};
}

std::string to_rfc3339(Time t)
{
  std::time_t secs = static_cast<std::time_t>(t.nanos / 1000000000LL);
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[80];
  std::snprintf(
    buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ",
    tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
  return buf;
}

}  // namespace ngbus
