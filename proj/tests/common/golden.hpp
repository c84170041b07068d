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

#ifndef TESTS__COMMON__GOLDEN_HPP_
#define TESTS__COMMON__GOLDEN_HPP_

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ngbus::testing {

/// Reads a committed golden file; the directory comes from NGBUS_GOLDEN_DIR
/// (set by the test harness).
inline std::vector<std::uint8_t> golden_bytes(const std::string & name)
{
  const char * dir = std::getenv("NGBUS_GOLDEN_DIR");
  if (dir == nullptr) {
    throw std::runtime_error("NGBUS_GOLDEN_DIR is not set");
  }
  std::ifstream in(std::string(dir) + "/" + name, std::ios::binary);
  if (!in) {
    throw std::runtime_error("missing golden file " + name);
  }
  return std::vector<std::uint8_t>(
    std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace ngbus::testing

#endif  // TESTS__COMMON__GOLDEN_HPP_
