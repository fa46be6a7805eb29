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

#include "posym/landmarks.hpp"

#include <cstddef>
#include <string>

#include "posym/error.hpp"
#include "posym/geometry.hpp"

namespace posym {

ValidationReport validate(const LandmarkSet& ls) {
    namespace lm = landmark;
    ValidationReport report;

    if (ls.points.size() != static_cast<std::size_t>(lm::kPointCount)) {
        report.errors.push_back("point count is " + std::to_string(ls.points.size()) +
                                ", expected " + std::to_string(lm::kPointCount));
    }
    for (std::size_t i = 0; i < ls.points.size(); ++i) {
        if (!is_finite(ls.points[i])) {
            report.errors.push_back("point " + std::to_string(i) + " has a non-finite coordinate");
        }
    }
    if (!report.errors.empty()) {
        return report;
    }

    const Point2& outer_r = ls.points[lm::kOuterCanthusR];
    const Point2& outer_l = ls.points[lm::kOuterCanthusL];
    const Point2& shoulder_r = ls.points[lm::kShoulderR];
    const Point2& shoulder_l = ls.points[lm::kShoulderL];

    if (outer_r.x >= outer_l.x) {
        report.warnings.push_back("mirrored-face: x(P36) >= x(P45)");
    }
    if (shoulder_r.x >= shoulder_l.x) {
        report.warnings.push_back("mirrored-shoulders: x(P68) >= x(P69)");
    }
    if (dist(outer_r, outer_l) < 1.0) {
        report.warnings.push_back("degenerate-span: outer-canthal distance under 1 pixel");
    }
    if (dist(shoulder_r, shoulder_l) < 1.0) {
        report.warnings.push_back("degenerate-span: shoulder distance under 1 pixel");
    }
    return report;
}

void require_valid(const LandmarkSet& ls) {
    const ValidationReport report = validate(ls);
    if (!report.ok()) {
        throw Error("invalid landmark set '" + ls.image_id + "': " + report.errors.front());
    }
}

}  // namespace posym
