// Copyright 2026 The posym Authors
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

#include "posym/geometry.hpp"

#include <numbers>

#include "posym/error.hpp"

namespace posym {

namespace {

bool is_zero(const Vec2& u) {
    return u.dx == 0.0 && u.dy == 0.0;
}

}  // namespace

double signed_angle_deg(const Vec2& u, const Vec2& v) {
    if (is_zero(u) || is_zero(v)) {
        throw DegenerateDirectionError("signed_angle_deg: zero-length direction");
    }
    double deg = std::atan2(cross(u, v), dot(u, v)) / std::numbers::pi * 180.0;
    // atan2 yields [-180, 180]; fold the -180 branch so the range is (-180, 180].
    return deg == -180.0 ? 180.0 : deg;
}

Vec2 perp_cw(const Vec2& u) {
    if (is_zero(u)) {
        throw DegenerateDirectionError("perp_cw: zero-length direction");
    }
    return {-u.dy, u.dx};
}

double point_line_dist(const Point2& p, const Line2& line) {
    if (is_zero(line.direction)) {
        throw DegenerateDirectionError("point_line_dist: zero-length direction");
    }
    return std::abs(cross(line.direction, vec(line.anchor, p))) / norm(line.direction);
}

Point2 rotate_about(const Point2& p, const Point2& center, double deg) {
    const double rad = deg / 180.0 * std::numbers::pi;
    const double c = std::cos(rad);
    const double s = std::sin(rad);
    const Vec2 r = vec(center, p);
    // In y-down coordinates this matrix turns +x toward +y for positive
    // angles, i.e. clockwise on screen.
    return {center.x + c * r.dx - s * r.dy, center.y + s * r.dx + c * r.dy};
}

}  // namespace posym
