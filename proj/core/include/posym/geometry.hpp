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

#pragma once

#include <cmath>

#include "posym/point.hpp"

namespace posym {

// 2D primitives over image coordinates (pixels, y down). One orientation
// convention is fixed here and inherited by every measure: a positive
// signed angle is a clockwise rotation as displayed on screen.

/// Displacement between two points, in pixels.
struct Vec2 {
    double dx = 0.0;
    double dy = 0.0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// A line anchored at a point with a (non-zero) direction.
struct Line2 {
    Point2 anchor;
    Vec2 direction;
};

/// Vector from p to q.
inline Vec2 vec(const Point2& p, const Point2& q) {
    return {q.x - p.x, q.y - p.y};
}

/// Componentwise mean of p and q.
inline Point2 midpoint(const Point2& p, const Point2& q) {
    return {(p.x + q.x) / 2.0, (p.y + q.y) / 2.0};
}

inline double dot(const Vec2& u, const Vec2& v) {
    return u.dx * v.dx + u.dy * v.dy;
}

/// z component of the 3D cross product. In y-down coordinates a positive
/// value means v lies clockwise of u on screen.
inline double cross(const Vec2& u, const Vec2& v) {
    return u.dx * v.dy - u.dy * v.dx;
}

inline double norm(const Vec2& u) {
    return std::hypot(u.dx, u.dy);
}

/// Euclidean distance between p and q, in pixels.
inline double dist(const Point2& p, const Point2& q) {
    return norm(vec(p, q));
}

/// Signed angle, in degrees in (-180, 180], that carries the direction of
/// u onto the direction of v. Positive is clockwise on screen. Antisymmetric
/// except at the 180 branch point, where +180 is returned for both orders.
/// Throws DegenerateDirectionError on a zero-length input.
double signed_angle_deg(const Vec2& u, const Vec2& v);

/// u rotated 90 degrees clockwise on screen: (-dy, dx). Same norm as u;
/// signed_angle_deg(u, perp_cw(u)) == +90.
/// Throws DegenerateDirectionError on a zero-length input.
Vec2 perp_cw(const Vec2& u);

/// Distance from p to the line, |cross(direction, p - anchor)| / |direction|.
/// Throws DegenerateDirectionError if the line direction is zero.
double point_line_dist(const Point2& p, const Line2& line);

/// p rotated about center by deg degrees, clockwise on screen for positive
/// deg (consistent with signed_angle_deg).
Point2 rotate_about(const Point2& p, const Point2& center, double deg);

}  // namespace posym
