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

#include <functional>
#include <random>
#include <regex>

#include "ngbus/errors.hpp"
#include "ngbus/messages.hpp"
#include "ngbus/qos.hpp"
#include "ngbus/time.hpp"
#include "ngbus/topic_name.hpp"

using namespace ngbus;

namespace {

ErrorCode code_of(const std::function<void()> & fn)
{
  try {
    fn();
  } catch (const Error & e) {
    return e.code();
  }
  FAIL("expected an ngbus::Error");
  return ErrorCode::kIoFailed;
}

}  // namespace

TEST_SUITE_BEGIN("core_model");

TEST_CASE("topic names: rule cases")
{
  CHECK(TopicName::validate("/image_raw").str() == "/image_raw");
  CHECK(TopicName::validate("/imu/data").str() == "/imu/data");
  CHECK(code_of([] {TopicName::validate("image_raw");}) == ErrorCode::kMalformedTopic);
  CHECK(code_of([] {TopicName::validate("/imu//data");}) == ErrorCode::kMalformedTopic);
  CHECK(code_of([] {TopicName::validate("");}) == ErrorCode::kMalformedTopic);
  CHECK(code_of([] {TopicName::validate("/");}) == ErrorCode::kMalformedTopic);
  CHECK(code_of([] {TopicName::validate("/imu/");}) == ErrorCode::kMalformedTopic);
  CHECK(code_of([] {TopicName::validate("/Imu");}) == ErrorCode::kMalformedTopic);
  CHECK(code_of([] {TopicName::validate("/imu data");}) == ErrorCode::kMalformedTopic);
}

TEST_CASE("topic names: accepts exactly ^(/[a-z0-9_]+)+$")
{
  const std::regex reference("^(/[a-z0-9_]+)+$");
  std::mt19937 rng(20260810);
  static constexpr char kAlphabet[] = "abz09_/AB .";
  std::uniform_int_distribution<std::size_t> len(0, 12);
  std::uniform_int_distribution<std::size_t> pick(0, sizeof(kAlphabet) - 2);
  for (int i = 0; i < 4000; ++i) {
    std::string s;
    const std::size_t n = len(rng);
    for (std::size_t k = 0; k < n; ++k) {
      s.push_back(kAlphabet[pick(rng)]);
    }
    const bool expected = std::regex_match(s, reference);
    bool accepted = true;
    try {
      TopicName::validate(s);
    } catch (const Error & e) {
      REQUIRE(e.code() == ErrorCode::kMalformedTopic);
      accepted = false;
    }
    CAPTURE(s);
    CHECK(accepted == expected);
  }
}

TEST_CASE("now() is non-decreasing and epoch formats as RFC 3339")
{
  const Time t1 = now();
  const Time t2 = now();
  CHECK(t2.nanos >= t1.nanos);
  CHECK(t1.nanos > 0);
  CHECK(to_rfc3339(Time{0}) == "1970-01-01T00:00:00Z");
  CHECK(to_rfc3339(Time{1000000000LL}) == "1970-01-01T00:00:01Z");
}

TEST_CASE("qos defaults")
{
  CHECK(sensor_qos().reliability == Reliability::kBestEffort);
  CHECK(sensor_qos().history_depth == 5);
  CHECK(reliable_qos().reliability == Reliability::kReliable);
  CHECK(reliable_qos().history_depth == 10);
}

TEST_CASE("image invariants checked at construction")
{
  CHECK_NOTHROW(Image(Header{}, 2, 2, ImageEncoding::kMono8, 2, std::vector<std::uint8_t>(4)));
  CHECK_NOTHROW(Image(Header{}, 2, 2, ImageEncoding::kRgb8, 6, std::vector<std::uint8_t>(12)));
  CHECK(
    code_of(
      [] {Image(Header{}, 2, 2, ImageEncoding::kMono8, 3, std::vector<std::uint8_t>(6));}) ==
    ErrorCode::kInvariantViolation);
  CHECK(
    code_of(
      [] {Image(Header{}, 2, 2, ImageEncoding::kMono8, 2, std::vector<std::uint8_t>(5));}) ==
    ErrorCode::kInvariantViolation);
}

TEST_CASE("imu and joint state invariants")
{
  CHECK_NOTHROW(Imu(Header{}, {1, 0, 0, 0}, {0, 0, 0}, {0, 0, 0}));
  CHECK(
    code_of([] {Imu(Header{}, {1.0, 0.1, 0, 0}, {0, 0, 0}, {0, 0, 0});}) ==
    ErrorCode::kInvariantViolation);

  CHECK_NOTHROW(JointState(Header{}, {"a", "b"}, {0.0, 1.0}, {}, {}));
  CHECK_NOTHROW(JointState(Header{}, {"a", "b"}, {0.0, 1.0}, {1.0, 2.0}, {}));
  CHECK(
    code_of([] {JointState(Header{}, {"a", "b"}, {0.0}, {}, {});}) ==
    ErrorCode::kInvariantViolation);
  CHECK(
    code_of([] {JointState(Header{}, {"a", "b"}, {0.0, 1.0}, {1.0}, {});}) ==
    ErrorCode::kInvariantViolation);
}

TEST_CASE("deep-copy diagnostics: zero at creation, copy bumps, move keeps")
{
  Image img(Header{}, 2, 2, ImageEncoding::kMono8, 2, std::vector<std::uint8_t>(4, 9));
  CHECK(img.diag.deep_copy_count() == 0);

  Image copy = img;
  CHECK(copy.diag.deep_copy_count() == 1);
  CHECK(img.diag.deep_copy_count() == 0);

  Image copy2 = copy;
  CHECK(copy2.diag.deep_copy_count() == 2);

  Image moved = std::move(copy2);
  CHECK(moved.diag.deep_copy_count() == 2);

  const Payload payload{std::move(moved)};
  CHECK(payload_diag(payload).deep_copy_count() == 2);
}

TEST_CASE("payload type mapping")
{
  const Payload img{Image(Header{}, 3, 3, ImageEncoding::kMono8, 3, std::vector<std::uint8_t>(9))};
  CHECK(payload_type_of(img) == PayloadType::kImage);
  CHECK(parse_payload_type("joint_state") == PayloadType::kJointState);
  CHECK(to_string(PayloadType::kImu) == std::string("imu"));
  CHECK(code_of([] {parse_payload_type("pointcloud");}) == ErrorCode::kConfigInvalid);
}

TEST_SUITE_END();
