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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "posym/error.hpp"
#include "posym/rng.hpp"

namespace posym {
namespace {

Vec2 random_nonzero(Rng& rng) {
    while (true) {
        Vec2 v{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        if (norm(v) > 0.1) return v;
    }
}

double wrap360(double deg) {
    double r = std::fmod(deg, 360.0);
    if (r < 0) r += 360.0;
    return r;
}

TEST(Vec, BetweenPoints) {
    EXPECT_EQ(vec({0, 0}, {3, 4}), (Vec2{3, 4}));
    EXPECT_EQ(vec({1, 1}, {1, 1}), (Vec2{0, 0}));
    EXPECT_EQ(vec({2, 5}, {-1, 7}), (Vec2{-3, 2}));
}

TEST(Midpoint, ComponentwiseMean) {
    EXPECT_EQ(midpoint({0, 0}, {2, 2}), (Point2{1, 1}));
    EXPECT_EQ(midpoint({5, 3}, {5, 3}), (Point2{5, 3}));
    EXPECT_EQ(midpoint({100, 100}, {140, 100}), (Point2{120, 100}));
}

TEST(Dist, Examples) {
    EXPECT_DOUBLE_EQ(dist({0, 0}, {3, 4}), 5.0);
    EXPECT_DOUBLE_EQ(dist({7, 7}, {7, 7}), 0.0);
}

TEST(Dist, Symmetric) {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const Point2 p{rng.uniform(-100, 100), rng.uniform(-100, 100)};
        const Point2 q{rng.uniform(-100, 100), rng.uniform(-100, 100)};
        EXPECT_DOUBLE_EQ(dist(p, q), dist(q, p));
    }
}

TEST(SignedAngle, IdenticalDirectionsIsZero) {
    EXPECT_DOUBLE_EQ(signed_angle_deg({1, 0}, {1, 0}), 0.0);
    EXPECT_DOUBLE_EQ(signed_angle_deg({3, -2}, {6, -4}), 0.0);
}

TEST(SignedAngle, RightToDownIsPlusNinety) {
    // +y is down on screen, so right -> down is a clockwise quarter turn.
    EXPECT_DOUBLE_EQ(signed_angle_deg({1, 0}, {0, 1}), 90.0);
    EXPECT_DOUBLE_EQ(signed_angle_deg({0, 1}, {1, 0}), -90.0);
}

TEST(SignedAngle, MatchesAtan2Oracle) {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        const Vec2 u = random_nonzero(rng);
        const Vec2 v = random_nonzero(rng);
        const double expected =
            std::atan2(u.dx * v.dy - u.dy * v.dx, u.dx * v.dx + u.dy * v.dy) * 180.0 /
            std::numbers::pi;
        EXPECT_NEAR(signed_angle_deg(u, v), expected, 1e-12);
    }
}

TEST(SignedAngle, Antisymmetric) {
    EXPECT_DOUBLE_EQ(signed_angle_deg({1, 0}, {-3, 2}), -signed_angle_deg({-3, 2}, {1, 0}));
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        const Vec2 u = random_nonzero(rng);
        const Vec2 v = random_nonzero(rng);
        if (std::abs(signed_angle_deg(u, v)) == 180.0) continue;  // branch point
        EXPECT_DOUBLE_EQ(signed_angle_deg(u, v), -signed_angle_deg(v, u));
    }
}

TEST(SignedAngle, BranchPointReturnsPlus180) {
    EXPECT_DOUBLE_EQ(signed_angle_deg({1, 0}, {-1, 0}), 180.0);
    EXPECT_DOUBLE_EQ(signed_angle_deg({-1, 0}, {1, 0}), 180.0);
    EXPECT_DOUBLE_EQ(signed_angle_deg({0, -2}, {0, 5}), 180.0);
}

TEST(SignedAngle, AdditiveModulo360) {
    Rng rng(14);
    for (int i = 0; i < 200; ++i) {
        const Vec2 u = random_nonzero(rng);
        const Vec2 v = random_nonzero(rng);
        const Vec2 w = random_nonzero(rng);
        const double lhs = signed_angle_deg(u, v) + signed_angle_deg(v, w);
        const double rhs = signed_angle_deg(u, w);
        const double diff = wrap360(lhs - rhs);
        EXPECT_TRUE(diff < 1e-9 || 360.0 - diff < 1e-9)
            << "u->v " << signed_angle_deg(u, v) << " v->w " << signed_angle_deg(v, w) << " u->w "
            << rhs;
    }
}

TEST(SignedAngle, InvariantUnderPositiveScaling) {
    Rng rng(15);
    for (int i = 0; i < 200; ++i) {
        const Vec2 u = random_nonzero(rng);
        const Vec2 v = random_nonzero(rng);
        const double a = rng.uniform(0.01, 100.0);
        const double b = rng.uniform(0.01, 100.0);
        const Vec2 ua{a * u.dx, a * u.dy};
        const Vec2 vb{b * v.dx, b * v.dy};
        EXPECT_NEAR(signed_angle_deg(ua, vb), signed_angle_deg(u, v), 1e-9);
    }
}

TEST(SignedAngle, InvariantUnderCommonRotation) {
    Rng rng(16);
    const Point2 origin{0, 0};
    for (int i = 0; i < 200; ++i) {
        const Vec2 u = random_nonzero(rng);
        const Vec2 v = random_nonzero(rng);
        const double base = signed_angle_deg(u, v);
        if (std::abs(base) > 179.0) continue;  // avoid the wrap at the branch
        const double theta = rng.uniform(-180.0, 180.0);
        const Point2 pu = rotate_about({u.dx, u.dy}, origin, theta);
        const Point2 pv = rotate_about({v.dx, v.dy}, origin, theta);
        EXPECT_NEAR(signed_angle_deg({pu.x, pu.y}, {pv.x, pv.y}), base, 1e-9);
    }
}

TEST(SignedAngle, ZeroVectorIsAnError) {
    EXPECT_THROW(signed_angle_deg({0, 0}, {1, 0}), DegenerateDirectionError);
    EXPECT_THROW(signed_angle_deg({1, 0}, {0, 0}), DegenerateDirectionError);
}

TEST(PerpCw, QuarterTurnExamples) {
    EXPECT_EQ(perp_cw({1, 0}), (Vec2{0, 1}));
    EXPECT_EQ(perp_cw({0, 2}), (Vec2{-2, 0}));
}

TEST(PerpCw, PerpendicularSameNormPlusNinety) {
    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        const Vec2 u = random_nonzero(rng);
        const Vec2 p = perp_cw(u);
        EXPECT_DOUBLE_EQ(dot(u, p), 0.0);
        EXPECT_DOUBLE_EQ(norm(p), norm(u));
        EXPECT_DOUBLE_EQ(signed_angle_deg(u, p), 90.0);
    }
}

TEST(PerpCw, TwiceIsExactNegation) {
    Rng rng(18);
    for (int i = 0; i < 100; ++i) {
        const Vec2 u = random_nonzero(rng);
        const Vec2 pp = perp_cw(perp_cw(u));
        EXPECT_EQ(pp, (Vec2{-u.dx, -u.dy}));
    }
}

TEST(PerpCw, ZeroVectorIsAnError) {
    EXPECT_THROW(perp_cw({0, 0}), DegenerateDirectionError);
}

TEST(PointLineDist, Examples) {
    EXPECT_DOUBLE_EQ(point_line_dist({160, 100}, {{160, 300}, {0, 1}}), 0.0);
    EXPECT_DOUBLE_EQ(point_line_dist({0, 5}, {{0, 0}, {1, 0}}), 5.0);
}

TEST(PointLineDist, InvariantUnderDirectionScaling) {
    Rng rng(19);
    for (int i = 0; i < 100; ++i) {
        const Point2 p{rng.uniform(-50, 50), rng.uniform(-50, 50)};
        const Point2 anchor{rng.uniform(-50, 50), rng.uniform(-50, 50)};
        const Vec2 d = random_nonzero(rng);
        const double s = rng.uniform(0.01, 100.0);
        EXPECT_NEAR(point_line_dist(p, {anchor, d}),
                    point_line_dist(p, {anchor, {s * d.dx, s * d.dy}}), 1e-9);
    }
}

TEST(PointLineDist, InvariantUnderCommonTranslation) {
    Rng rng(20);
    for (int i = 0; i < 100; ++i) {
        const Point2 p{rng.uniform(-50, 50), rng.uniform(-50, 50)};
        const Point2 anchor{rng.uniform(-50, 50), rng.uniform(-50, 50)};
        const Vec2 d = random_nonzero(rng);
        const double dx = rng.uniform(-100, 100);
        const double dy = rng.uniform(-100, 100);
        EXPECT_NEAR(point_line_dist(p, {anchor, d}),
                    point_line_dist({p.x + dx, p.y + dy}, {{anchor.x + dx, anchor.y + dy}, d}),
                    1e-9);
    }
}

TEST(PointLineDist, InvariantUnderReanchoringAlongDirection) {
    Rng rng(21);
    for (int i = 0; i < 100; ++i) {
        const Point2 p{rng.uniform(-50, 50), rng.uniform(-50, 50)};
        const Point2 anchor{rng.uniform(-50, 50), rng.uniform(-50, 50)};
        const Vec2 d = random_nonzero(rng);
        const double t = rng.uniform(-10.0, 10.0);
        const Line2 shifted{{anchor.x + t * d.dx, anchor.y + t * d.dy}, d};
        EXPECT_NEAR(point_line_dist(p, {anchor, d}), point_line_dist(p, shifted), 1e-9);
    }
}

TEST(PointLineDist, ZeroDirectionIsAnError) {
    EXPECT_THROW(point_line_dist({1, 2}, {{0, 0}, {0, 0}}), DegenerateDirectionError);
}

TEST(RotateAbout, ClockwiseOnScreen) {
    // (1,0) about the origin by +90 goes to (0,1): right turns to down.
    const Point2 r = rotate_about({1, 0}, {0, 0}, 90.0);
    EXPECT_NEAR(r.x, 0.0, 1e-15);
    EXPECT_NEAR(r.y, 1.0, 1e-15);
    // Consistency with the signed-angle convention.
    Rng rng(22);
    for (int i = 0; i < 100; ++i) {
        const Vec2 u = random_nonzero(rng);
        const double deg = rng.uniform(-179.0, 179.0);
        const Point2 tip = rotate_about({u.dx, u.dy}, {0, 0}, deg);
        EXPECT_NEAR(signed_angle_deg(u, {tip.x, tip.y}), deg, 1e-9);
    }
}

}  // namespace
}  // namespace posym
