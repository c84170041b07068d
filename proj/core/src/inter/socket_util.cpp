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

#include "socket_util.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <string>
#include <thread>

#include "ngbus/errors.hpp"

namespace ngbus::inter {

namespace {

sockaddr_in loopback(std::uint16_t port)
{
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port);
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  return addr;
}

std::string errno_text()
{
  return std::strerror(errno);
}

}  // namespace

void Fd::reset() noexcept
{
  if (fd_ >= 0) {
    ::close(fd_);
    fd_ = -1;
  }
}

Fd udp_bind(std::uint16_t port, bool reuse_addr)
{
  Fd fd(::socket(AF_INET, SOCK_DGRAM, 0));
  if (!fd.valid()) {
    throw Error(ErrorCode::kBindFailed, "socket(): " + errno_text());
  }
  if (reuse_addr) {
    int one = 1;
    ::setsockopt(fd.get(), SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
  }
  int rcvbuf = 4 * 1024 * 1024;
  ::setsockopt(fd.get(), SOL_SOCKET, SO_RCVBUF, &rcvbuf, sizeof(rcvbuf));
  sockaddr_in addr = loopback(port);
  if (::bind(fd.get(), reinterpret_cast<sockaddr *>(&addr), sizeof(addr)) != 0) {
    throw Error(
      ErrorCode::kBindFailed, "bind udp 127.0.0.1:" + std::to_string(port) + ": " + errno_text());
  }
  return fd;
}

Fd udp_socket()
{
  Fd fd(::socket(AF_INET, SOCK_DGRAM, 0));
  if (!fd.valid()) {
    throw Error(ErrorCode::kIoFailed, "socket(): " + errno_text());
  }
  int sndbuf = 4 * 1024 * 1024;
  ::setsockopt(fd.get(), SOL_SOCKET, SO_SNDBUF, &sndbuf, sizeof(sndbuf));
  return fd;
}

void udp_send_to(const Fd & fd, std::uint16_t port, const std::uint8_t * data, std::size_t len)
{
  sockaddr_in addr = loopback(port);
  ssize_t n = ::sendto(
    fd.get(), data, len, 0, reinterpret_cast<sockaddr *>(&addr), sizeof(addr));
  if (n < 0 || static_cast<std::size_t>(n) != len) {
    // A missing receiver shows up as ECONNREFUSED on loopback; best-effort
    // delivery treats that as silence, not failure.
    if (errno == ECONNREFUSED) {
      return;
    }
    throw Error(
      ErrorCode::kIoFailed, "sendto 127.0.0.1:" + std::to_string(port) + ": " + errno_text());
  }
}

Fd tcp_listen(std::uint16_t port, int backlog)
{
  Fd fd(::socket(AF_INET, SOCK_STREAM, 0));
  if (!fd.valid()) {
    throw Error(ErrorCode::kBindFailed, "socket(): " + errno_text());
  }
  int one = 1;
  ::setsockopt(fd.get(), SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
  sockaddr_in addr = loopback(port);
  if (::bind(fd.get(), reinterpret_cast<sockaddr *>(&addr), sizeof(addr)) != 0) {
    throw Error(
      ErrorCode::kBindFailed, "bind tcp 127.0.0.1:" + std::to_string(port) + ": " + errno_text());
  }
  if (::listen(fd.get(), backlog) != 0) {
    throw Error(ErrorCode::kBindFailed, "listen: " + errno_text());
  }
  return fd;
}

Fd tcp_connect_retry(std::uint16_t port, std::chrono::milliseconds deadline)
{
  auto give_up = std::chrono::steady_clock::now() + deadline;
  for (;;) {
    Fd fd(::socket(AF_INET, SOCK_STREAM, 0));
    if (!fd.valid()) {
      throw Error(ErrorCode::kConnectionLost, "socket(): " + errno_text());
    }
    sockaddr_in addr = loopback(port);
    if (::connect(fd.get(), reinterpret_cast<sockaddr *>(&addr), sizeof(addr)) == 0) {
      int one = 1;
      ::setsockopt(fd.get(), IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
      return fd;
    }
    if (std::chrono::steady_clock::now() >= give_up) {
      throw Error(
        ErrorCode::kConnectionLost,
        "connect 127.0.0.1:" + std::to_string(port) + ": " + errno_text());
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
}

void write_all(const Fd & fd, const std::uint8_t * data, std::size_t len)
{
  std::size_t sent = 0;
  while (sent < len) {
    ssize_t n = ::send(fd.get(), data + sent, len - sent, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) {
        continue;
      }
      throw Error(ErrorCode::kConnectionLost, "send: " + errno_text());
    }
    sent += static_cast<std::size_t>(n);
  }
}

}  // namespace ngbus::inter
