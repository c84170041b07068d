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

#include <doctest.h>

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

#include "ngbus/errors.hpp"
#include "ngbus/gc/bridge.hpp"
#include "ngbus/gc/codec.hpp"

#include "../common/generators.hpp"
#include "../common/golden.hpp"

using namespace ngbus;
using namespace std::chrono_literals;

namespace {

constexpr std::uint16_t kTestGcPort = 18838;

void send_udp(std::uint16_t port, const void * data, std::size_t len)
{
  const int fd = ::socket(AF_INET, SOCK_DGRAM, 0);
  REQUIRE(fd >= 0);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port);
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  ::sendto(fd, data, len, 0, reinterpret_cast<sockaddr *>(&addr), sizeof(addr));
  ::close(fd);
}

ErrorCode parse_error(std::span<const std::uint8_t> bytes)
{
  try {
    gc::parse_gc_packet(bytes);
  } catch (const Error & e) {
    return e.code();
  }
  FAIL("expected parse to fail");
  return ErrorCode::kIoFailed;
}

}  // namespace

TEST_SUITE_BEGIN("gamecontroller");

TEST_CASE("all-zero INITIAL state encodes to the documented 24 bytes")
{
  const GameState state(0, 0, GamePhase::kInitial, false, 0, 0, 0, 0, {});
  const auto bytes = gc::encode_gc_packet(state);
  CHECK(std::vector<std::uint8_t>(bytes.begin(), bytes.end()) ==
    testing::golden_bytes("gc_initial_zero.bin"));
  CHECK(bytes[0] == 'R');
  CHECK(bytes[1] == 'G');
  CHECK(bytes[2] == 'm');
  CHECK(bytes[3] == 'e');
  CHECK(bytes[4] == 0x0C);
  CHECK(bytes[5] == 0x00);
  for (std::size_t i = 6; i < 24; ++i) {
    CHECK(bytes[i] == 0);
  }
}

TEST_CASE("scores land at offsets 18 and 22")
{
  std::array<TeamInfo, 2> teams{};
  teams[0] = TeamInfo{1, 0, 3, 0};
  teams[1] = TeamInfo{2, 1, 1, 0};
  const GameState state(7, 4, GamePhase::kPlaying, true, 1, 0, 600, 0, teams);
  const auto bytes = gc::encode_gc_packet(state);
  CHECK(bytes[18] == 3);
  CHECK(bytes[22] == 1);
  CHECK(std::vector<std::uint8_t>(bytes.begin(), bytes.end()) ==
    testing::golden_bytes("gc_playing_scores.bin"));
}

TEST_CASE("encode/parse identity on 1000 random states")
{
  std::mt19937 rng(20260810);
  for (int i = 0; i < 1000; ++i) {
    const GameState state = testing::random_game_state(rng);
    const auto bytes = gc::encode_gc_packet(state);
    const GameState back = gc::parse_gc_packet(bytes);
    REQUIRE(back == state);
    CHECK(gc::encode_gc_packet(back) == bytes);
  }
}

TEST_CASE("length, magic, version and enum violations are typed")
{
  const GameState state(0, 0, GamePhase::kInitial, false, 0, 0, 0, 0, {});
  const auto good = gc::encode_gc_packet(state);

  CHECK(parse_error(std::span(good.data(), 23)) == ErrorCode::kBadLength);
  std::vector<std::uint8_t> long_pkt(good.begin(), good.end());
  long_pkt.push_back(0);
  CHECK(parse_error(long_pkt) == ErrorCode::kBadLength);

  auto bad = good;
  bad[0] = 'X';
  CHECK(parse_error(bad) == ErrorCode::kBadMagic);

  bad = good;
  bad[4] = 11;
  CHECK(parse_error(bad) == ErrorCode::kBadVersion);

  bad = good;
  bad[8] = 7;
  CHECK(parse_error(bad) == ErrorCode::kBadEnum);

  bad = good;
  bad[9] = 2;
  CHECK(parse_error(bad) == ErrorCode::kBadEnum);
}

TEST_CASE("parser is total over fuzzed buffers")
{
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> byte(0, 255);
  std::uniform_int_distribution<std::size_t> small(0, 64);
  for (int i = 0; i < 3000; ++i) {
    std::size_t len = small(rng);
    if (i % 100 == 0) {len = 65536;}
    if (i % 101 == 0) {len = 1000;}
    std::vector<std::uint8_t> buf(len);
    for (auto & b : buf) {
      b = static_cast<std::uint8_t>(byte(rng));
    }
    // Bias some runs toward nearly-valid packets.
    if (len >= 6 && i % 3 == 0) {
      buf[0] = 'R'; buf[1] = 'G'; buf[2] = 'm'; buf[3] = 'e';
      buf[4] = 12; buf[5] = 0;
    }
    try {
      (void)gc::parse_gc_packet(buf);
    } catch (const Error &) {
      // typed failures only
    }
  }
}

TEST_CASE("bridge publishes valid packets in order and counts malformed ones")
{
  std::atomic<bool> stop{false};
  gc::BridgeStats stats;
  std::mutex mu;
  std::vector<GameState> published;
  std::thread bridge(
    [&] {
      gc::bridge_run(
        kTestGcPort,
        [&mu, &published](GameState s) {
          std::lock_guard<std::mutex> lock(mu);
          published.push_back(std::move(s));
        },
        stop, stats);
    });
  std::this_thread::sleep_for(100ms);

  SUBCASE("five valid packets arrive in order")
  {
    for (std::uint8_t n = 0; n < 5; ++n) {
      const GameState s(
        n, 4, n % 2 == 0 ? GamePhase::kReady : GamePhase::kSet, true, 0, 0, 10, 0, {});
      const auto bytes = gc::encode_gc_packet(s);
      send_udp(kTestGcPort, bytes.data(), bytes.size());
      std::this_thread::sleep_for(10ms);
    }
    const auto give_up = std::chrono::steady_clock::now() + 2s;
    while (std::chrono::steady_clock::now() < give_up) {
      {
        std::lock_guard<std::mutex> lock(mu);
        if (published.size() >= 5) {break;}
      }
      std::this_thread::sleep_for(5ms);
    }
    std::lock_guard<std::mutex> lock(mu);
    REQUIRE(published.size() == 5);
    for (std::uint8_t n = 0; n < 5; ++n) {
      CHECK(published[n].packet_number == n);
    }
    CHECK(published[0].state == GamePhase::kReady);
    CHECK(published[1].state == GamePhase::kSet);
    CHECK(stats.malformed.load() == 0);
  }

  SUBCASE("malformed packets are counted, not published")
  {
    const GameState s(9, 4, GamePhase::kPlaying, false, 1, 0, 300, 0, {});
    const auto good = gc::encode_gc_packet(s);
    const std::uint8_t junk[7] = {1, 2, 3, 4, 5, 6, 7};
    send_udp(kTestGcPort, good.data(), good.size());
    send_udp(kTestGcPort, junk, sizeof(junk));
    send_udp(kTestGcPort, good.data(), good.size());
    send_udp(kTestGcPort, junk, sizeof(junk));
    send_udp(kTestGcPort, good.data(), good.size());

    const auto give_up = std::chrono::steady_clock::now() + 2s;
    while (std::chrono::steady_clock::now() < give_up) {
      {
        std::lock_guard<std::mutex> lock(mu);
        if (published.size() >= 3 && stats.malformed.load() >= 2) {break;}
      }
      std::this_thread::sleep_for(5ms);
    }
    std::lock_guard<std::mutex> lock(mu);
    CHECK(published.size() == 3);
    CHECK(stats.malformed.load() == 2);
  }

  stop.store(true);
  bridge.join();
}

TEST_CASE("bind failure is typed")
{
  const int blocker = ::socket(AF_INET, SOCK_DGRAM, 0);
  REQUIRE(blocker >= 0);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(kTestGcPort + 1);
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  REQUIRE(::bind(blocker, reinterpret_cast<sockaddr *>(&addr), sizeof(addr)) == 0);

  std::atomic<bool> stop{false};
  gc::BridgeStats stats;
  try {
    gc::bridge_run(kTestGcPort + 1, [](GameState) {}, stop, stats);
    FAIL("expected BIND_FAILED");
  } catch (const Error & e) {
    CHECK(e.code() == ErrorCode::kBindFailed);
  }
  ::close(blocker);
}

TEST_SUITE_END();
