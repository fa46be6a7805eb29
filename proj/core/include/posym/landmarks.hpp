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

#include <string>
#include <vector>

#include "posym/point.hpp"

namespace posym {

// 70-point landmark scheme: indices 0-67 follow the community 68-point
// facial annotation order, 68-69 are the shoulder joints. "R"/"L" are the
// subject's anatomical right/left; in a frontal photo the subject's right
// appears on the image's left, so x(R) < x(L) for an un-mirrored set.

namespace landmark {

inline constexpr int kOuterCanthusR = 36;
inline constexpr int kInnerCanthusR = 39;
inline constexpr int kInnerCanthusL = 42;
inline constexpr int kOuterCanthusL = 45;
inline constexpr int kMouthCornerR = 48;
inline constexpr int kMouthCornerL = 54;
inline constexpr int kShoulderR = 68;
inline constexpr int kShoulderL = 69;

inline constexpr int kFacePointCount = 68;
inline constexpr int kPointCount = 70;

}  // namespace landmark

/// An image identifier plus its 70 ordered landmark points.
struct LandmarkSet {
    std::string image_id;
    std::vector<Point2> points;

    friend bool operator==(const LandmarkSet&, const LandmarkSet&) = default;
};

/// Outcome of validate(). Errors are structural violations that every
/// downstream operation must reject; warnings are plausibility flags
/// (mirrored ordering, near-degenerate spans) that do not block processing.
struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;

    bool ok() const { return errors.empty(); }
};

/// Checks a landmark set. Errors: point count != 70, non-finite coordinate.
/// Warnings: "mirrored-face" when x(P36) >= x(P45), "mirrored-shoulders"
/// when x(P68) >= x(P69), "degenerate-span" when the outer-canthal or the
/// shoulder distance is under one pixel. Pure and deterministic.
ValidationReport validate(const LandmarkSet& ls);

/// Throws Error with the first violation if validate(ls) reports errors.
void require_valid(const LandmarkSet& ls);

}  // namespace posym
