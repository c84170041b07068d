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

#include "ngbus/inter/receiver.hpp"

#include <poll.h>
#include <sys/socket.h>

#include <algorithm>
#include <cerrno>
#include <utility>

#include "ngbus/errors.hpp"
#include "socket_util.hpp"

namespace ngbus::inter {

Receiver::Receiver(Endpoint endpoint)
: endpoint_(std::move(endpoint)), read_buf_(64 * 1024)
{
  if (endpoint_.kind == TransportKind::kUdpBestEffort) {
    socket_ = std::make_unique<Fd>(udp_bind(endpoint_.port));
  } else {
    socket_ = std::make_unique<Fd>(tcp_listen(endpoint_.port));
  }
}

Receiver::~Receiver() = default;

std::optional<wire::WireFrame> Receiver::poll(std::chrono::milliseconds timeout)
{
  if (pending_.empty()) {
    pump(timeout);
  }
  if (pending_.empty()) {
    return std::nullopt;
  }
  wire::WireFrame frame = std::move(pending_.front());
  pending_.pop_front();
  return frame;
}

void Receiver::pump(std::chrono::milliseconds timeout)
{
  if (endpoint_.kind == TransportKind::kUdpBestEffort) {
    pump_udp(timeout);
  } else {
    pump_tcp(timeout);
  }
}

void Receiver::pump_udp(std::chrono::milliseconds timeout)
{
  pollfd pfd{socket_->get(), POLLIN, 0};
  int rc = ::poll(&pfd, 1, static_cast<int>(timeout.count()));
  if (rc <= 0) {
    return;
  }
  for (;;) {
    ssize_t n = ::recv(socket_->get(), read_buf_.data(), read_buf_.size(), MSG_DONTWAIT);
    if (n < 0) {
      break;  // EAGAIN or transient error; the next poll cycle retries
    }
    handle_frame_bytes(std::span<const std::uint8_t>(read_buf_.data(), static_cast<std::size_t>(n)));
  }
}

void Receiver::pump_tcp(std::chrono::milliseconds timeout)
{
  std::vector<pollfd> pfds;
  pfds.push_back({socket_->get(), POLLIN, 0});
  for (const Conn & c : conns_) {
    pfds.push_back({c.fd->get(), POLLIN, 0});
  }
  int rc = ::poll(pfds.data(), pfds.size(), static_cast<int>(timeout.count()));
  if (rc <= 0) {
    return;
  }
  if (pfds[0].revents & POLLIN) {
    int fd = ::accept(socket_->get(), nullptr, nullptr);
    if (fd >= 0) {
      conns_.push_back(Conn{std::make_unique<Fd>(fd), RecordStream{}});
    }
  }
  std::vector<std::size_t> dead;
  for (std::size_t i = 0; i + 1 < pfds.size(); ++i) {
    if (!(pfds[i + 1].revents & (POLLIN | POLLHUP | POLLERR))) {
      continue;
    }
    Conn & conn = conns_[i];
    bool drop = false;
    for (;;) {
      ssize_t n = ::recv(conn.fd->get(), read_buf_.data(), read_buf_.size(), MSG_DONTWAIT);
      if (n > 0) {
        try {
          conn.stream.feed(
            std::span<const std::uint8_t>(read_buf_.data(), static_cast<std::size_t>(n)));
          while (auto record = conn.stream.next()) {
            handle_frame_bytes(*record);
          }
        } catch (const Error &) {
          // Unrecoverable stream corruption; the connection is unusable.
          counters_.malformed.fetch_add(1, std::memory_order_relaxed);
          drop = true;
          break;
        }
        continue;
      }
      if (n < 0 && (errno == EAGAIN || errno == EWOULDBLOCK)) {
        break;
      }
      // EOF or hard error: surface nothing partial.
      try {
        conn.stream.finish();
      } catch (const Error &) {
        counters_.malformed.fetch_add(1, std::memory_order_relaxed);
      }
      drop = true;
      break;
    }
    if (drop) {
      dead.push_back(i);
    }
  }
  for (auto it = dead.rbegin(); it != dead.rend(); ++it) {
    conns_.erase(conns_.begin() + static_cast<std::ptrdiff_t>(*it));
  }
}

void Receiver::handle_frame_bytes(std::span<const std::uint8_t> bytes)
{
  std::optional<wire::WireFrame> frame;
  try {
    frame = wire::parse_frame(bytes);
  } catch (const Error &) {
    counters_.malformed.fetch_add(1, std::memory_order_relaxed);
    return;
  }
  if (frame->domain != endpoint_.domain) {
    counters_.wrong_domain.fetch_add(1, std::memory_order_relaxed);
    return;
  }
  pending_.push_back(std::move(*frame));
}

}  // namespace ngbus::inter
