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

#ifndef INTER__SOCKET_UTIL_HPP_
#define INTER__SOCKET_UTIL_HPP_

#include <chrono>
#include <cstdint>
#include <utility>

namespace ngbus::inter {

/// Owning file descriptor.
class Fd
{
public:
  Fd() = default;
  explicit Fd(int fd) noexcept
  : fd_(fd) {}
  Fd(Fd && other) noexcept
  : fd_(std::exchange(other.fd_, -1)) {}
  Fd & operator=(Fd && other) noexcept
  {
    if (this != &other) {
      reset();
      fd_ = std::exchange(other.fd_, -1);
    }
    return *this;
  }
  Fd(const Fd &) = delete;
  Fd & operator=(const Fd &) = delete;
  ~Fd() {reset();}

  int get() const noexcept {return fd_;}
  bool valid() const noexcept {return fd_ >= 0;}
  void reset() noexcept;

private:
  int fd_{-1};
};

/// Bound loopback UDP socket. \throws Error{kBindFailed}.
Fd udp_bind(std::uint16_t port, bool reuse_addr = false);

/// Unbound UDP socket for sending.
Fd udp_socket();

/// Sends one datagram to 127.0.0.1:port. \throws Error{kIoFailed}.
void udp_send_to(const Fd & fd, std::uint16_t port, const std::uint8_t * data, std::size_t len);

/// Listening loopback TCP socket with SO_REUSEADDR. \throws Error{kBindFailed}.
Fd tcp_listen(std::uint16_t port, int backlog = 16);

/// Connects to 127.0.0.1:port, retrying until the deadline (the listener may
/// come up later). TCP_NODELAY is set. \throws Error{kConnectionLost}.
Fd tcp_connect_retry(std::uint16_t port, std::chrono::milliseconds deadline);

/// Writes the whole buffer (MSG_NOSIGNAL). \throws Error{kConnectionLost}.
void write_all(const Fd & fd, const std::uint8_t * data, std::size_t len);

}  // namespace ngbus::inter

#endif  // INTER__SOCKET_UTIL_HPP_
