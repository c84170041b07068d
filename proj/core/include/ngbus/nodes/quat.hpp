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

#ifndef NGBUS__NODES__QUAT_HPP_
#define NGBUS__NODES__QUAT_HPP_

#include <algorithm>
#include <array>
#include <cmath>

namespace ngbus::nodes {

using Vec3 = std::array<double, 3>;

/// Unit quaternion (w, x, y, z), body-to-world rotation.
struct Quat
{
  double w{1.0};
  double x{0.0};
  double y{0.0};
  double z{0.0};

  std::array<double, 4> wxyz() const noexcept {return {w, x, y, z};}
};

inline Quat multiply(const Quat & a, const Quat & b) noexcept
{
  return Quat{
    a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
    a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
    a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
    a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quat conjugate(const Quat & q) noexcept {return Quat{q.w, -q.x, -q.y, -q.z};}

inline double norm(const Quat & q) noexcept
{
  return std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
}

inline Quat normalized(const Quat & q) noexcept
{
  const double n = norm(q);
  return Quat{q.w / n, q.x / n, q.y / n, q.z / n};
}

/// Quaternion of the rotation vector `axis_angle` (axis * angle, radians).
inline Quat from_rotation_vector(const Vec3 & axis_angle) noexcept
{
  const double angle = std::sqrt(
    axis_angle[0] * axis_angle[0] + axis_angle[1] * axis_angle[1] +
    axis_angle[2] * axis_angle[2]);
  if (angle < 1e-12) {
    return Quat{1.0, 0.5 * axis_angle[0], 0.5 * axis_angle[1], 0.5 * axis_angle[2]};
  }
  const double half = 0.5 * angle;
  const double s = std::sin(half) / angle;
  return Quat{std::cos(half), axis_angle[0] * s, axis_angle[1] * s, axis_angle[2] * s};
}

/// Rotates `v` by q (body frame to world frame).
inline Vec3 rotate(const Quat & q, const Vec3 & v) noexcept
{
  const Quat p{0.0, v[0], v[1], v[2]};
  const Quat r = multiply(multiply(q, p), conjugate(q));
  return Vec3{r.x, r.y, r.z};
}

/// Rotates `v` by the inverse of q (world frame to body frame).
inline Vec3 rotate_inverse(const Quat & q, const Vec3 & v) noexcept
{
  return rotate(conjugate(q), v);
}

inline double dot(const Vec3 & a, const Vec3 & b) noexcept
{
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 cross(const Vec3 & a, const Vec3 & b) noexcept
{
  return Vec3{
    a[1] * b[2] - a[2] * b[1],
    a[2] * b[0] - a[0] * b[2],
    a[0] * b[1] - a[1] * b[0]};
}

inline double length(const Vec3 & v) noexcept {return std::sqrt(dot(v, v));}

/// Angle between two non-zero vectors, in [0, pi].
inline double angle_between(const Vec3 & a, const Vec3 & b) noexcept
{
  const double c = dot(a, b) / (length(a) * length(b));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace ngbus::nodes

#endif  // NGBUS__NODES__QUAT_HPP_
