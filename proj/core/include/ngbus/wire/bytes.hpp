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

#ifndef NGBUS__WIRE__BYTES_HPP_
#define NGBUS__WIRE__BYTES_HPP_

#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

#include "ngbus/errors.hpp"

namespace ngbus::wire {

/// Little-endian append-only buffer.
class ByteWriter
{
public:
  void u8(std::uint8_t v) {buf_.push_back(v);}

  void u16(std::uint16_t v)
  {
    buf_.push_back(static_cast<std::uint8_t>(v));
    buf_.push_back(static_cast<std::uint8_t>(v >> 8));
  }

  void u32(std::uint32_t v)
  {
    for (int i = 0; i < 4; ++i) {
      buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
  }

  void u64(std::uint64_t v)
  {
    for (int i = 0; i < 8; ++i) {
      buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
  }

  void i16(std::int16_t v) {u16(static_cast<std::uint16_t>(v));}
  void i64(std::int64_t v) {u64(static_cast<std::uint64_t>(v));}
  void f64(double v) {u64(std::bit_cast<std::uint64_t>(v));}

  void bytes(std::span<const std::uint8_t> data)
  {
    buf_.insert(buf_.end(), data.begin(), data.end());
  }

  /// u32 byte count + UTF-8 bytes.
  void string(const std::string & s)
  {
    u32(static_cast<std::uint32_t>(s.size()));
    buf_.insert(buf_.end(), s.begin(), s.end());
  }

  std::vector<std::uint8_t> take() {return std::move(buf_);}
  std::size_t size() const noexcept {return buf_.size();}

private:
  std::vector<std::uint8_t> buf_;
};

/// Bounds-checked little-endian reader over a borrowed buffer.
/// Never reads past the span; a short buffer raises Error{kTruncated}.
class ByteReader
{
public:
  explicit ByteReader(std::span<const std::uint8_t> data) noexcept
  : data_(data) {}

  std::uint8_t u8() {return take(1)[0];}

  std::uint16_t u16()
  {
    auto b = take(2);
    return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
  }

  std::uint32_t u32()
  {
    auto b = take(4);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
  }

  std::uint64_t u64()
  {
    auto b = take(8);
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) {
      v = (v << 8) | b[i];
    }
    return v;
  }

  std::int16_t i16() {return static_cast<std::int16_t>(u16());}
  std::int64_t i64() {return static_cast<std::int64_t>(u64());}
  double f64() {return std::bit_cast<double>(u64());}

  std::span<const std::uint8_t> bytes(std::size_t n) {return take(n);}

  std::string string()
  {
    std::uint32_t n = u32();
    auto b = take(n);
    return std::string(reinterpret_cast<const char *>(b.data()), b.size());
  }

  std::size_t remaining() const noexcept {return data_.size() - pos_;}

  /// \throws Error{kInvariantViolation} if bytes are left unconsumed.
  void expect_end() const
  {
    if (remaining() != 0) {
      throw Error(
        ErrorCode::kInvariantViolation,
        std::to_string(remaining()) + " trailing bytes after decode");
    }
  }

private:
  std::span<const std::uint8_t> take(std::size_t n)
  {
    if (n > remaining()) {
      throw Error(
        ErrorCode::kTruncated,
        "need " + std::to_string(n) + " bytes, have " + std::to_string(remaining()));
    }
    auto out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  std::span<const std::uint8_t> data_;
  std::size_t pos_{0};
};

}  // namespace ngbus::wire

#endif  // NGBUS__WIRE__BYTES_HPP_
