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

#include "posym/measures.hpp"

#include <string>

#include "posym/error.hpp"

namespace posym {

namespace {

namespace lm = landmark;

const Point2& at(const LandmarkSet& ls, int index) {
    return ls.points[static_cast<std::size_t>(index)];
}

void require_direction(const Vec2& v, const char* measure, const char* element) {
    if (v.dx == 0.0 && v.dy == 0.0) {
        throw DegenerateMeasureError(measure, element);
    }
}

}  // namespace

std::string_view to_string(MeasureId id) {
    switch (id) {
        case MeasureId::fa: return "fa";
        case MeasureId::osa: return "osa";
        case MeasureId::rfs: return "rfs";
        case MeasureId::ga: return "ga";
        case MeasureId::hhd: return "hhd";
        case MeasureId::td: return "td";
    }
    return "?";
}

std::optional<MeasureId> measure_from_string(std::string_view name) {
    for (MeasureId id : kAllMeasures) {
        if (to_string(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

bool is_angle(MeasureId id) {
    return id == MeasureId::fa || id == MeasureId::osa || id == MeasureId::ga ||
           id == MeasureId::hhd;
}

double get(const SymmetryMeasures& m, MeasureId id) {
    switch (id) {
        case MeasureId::fa: return m.fa;
        case MeasureId::osa: return m.osa;
        case MeasureId::rfs: return m.rfs;
        case MeasureId::ga: return m.ga;
        case MeasureId::hhd: return m.hhd;
        case MeasureId::td: return m.td;
    }
    return 0.0;
}

DerivedLines derive_lines(const LandmarkSet& ls) {
    // The eye line joins the midpoints of the eye corners so that it is
    // insensitive to whether the eyes are open or closed.
    const Point2 eye_mid_r = midpoint(at(ls, lm::kOuterCanthusR), at(ls, lm::kInnerCanthusR));
    const Point2 eye_mid_l = midpoint(at(ls, lm::kInnerCanthusL), at(ls, lm::kOuterCanthusL));
    const Vec2 shoulder = vec(at(ls, lm::kShoulderR), at(ls, lm::kShoulderL));

    DerivedLines lines;
    lines.eye_line = vec(eye_mid_r, eye_mid_l);
    lines.outer_canthal = vec(at(ls, lm::kOuterCanthusR), at(ls, lm::kOuterCanthusL));
    lines.inner_canthal = vec(at(ls, lm::kInnerCanthusR), at(ls, lm::kInnerCanthusL));
    lines.mouth_line = vec(at(ls, lm::kMouthCornerR), at(ls, lm::kMouthCornerL));
    lines.shoulder_line = shoulder;
    lines.plumb.anchor = midpoint(at(ls, lm::kShoulderR), at(ls, lm::kShoulderL));
    // perp_cw rejects the zero vector; keep the plumb direction raw here and
    // let the measures report the degenerate shoulder line by name.
    lines.plumb.direction = Vec2{-shoulder.dy, shoulder.dx};
    return lines;
}

double facial_angle(const LandmarkSet& ls) {
    require_valid(ls);
    const DerivedLines lines = derive_lines(ls);
    require_direction(lines.eye_line, "fa", "eye line");
    require_direction(lines.mouth_line, "fa", "mouth line");
    return signed_angle_deg(lines.eye_line, lines.mouth_line);
}

double orbit_slopes_angle(const LandmarkSet& ls) {
    require_valid(ls);
    const DerivedLines lines = derive_lines(ls);
    require_direction(lines.outer_canthal, "osa", "outer-canthal line");
    require_direction(lines.inner_canthal, "osa", "inner-canthal line");
    return signed_angle_deg(lines.outer_canthal, lines.inner_canthal);
}

double relative_face_size(const LandmarkSet& ls) {
    require_valid(ls);
    const double left = dist(at(ls, lm::kOuterCanthusL), at(ls, lm::kMouthCornerL));
    const double right = dist(at(ls, lm::kOuterCanthusR), at(ls, lm::kMouthCornerR));
    if (right == 0.0) {
        throw DegenerateMeasureError("rfs", "right canthus-to-mouth length");
    }
    return left / right;
}

double gaze_angle(const LandmarkSet& ls) {
    require_valid(ls);
    const DerivedLines lines = derive_lines(ls);
    require_direction(lines.outer_canthal, "ga", "outer-canthal line");
    require_direction(lines.shoulder_line, "ga", "shoulder line");
    return signed_angle_deg(lines.outer_canthal, lines.plumb.direction);
}

double habitual_head_deviation(const LandmarkSet& ls) {
    require_valid(ls);
    const DerivedLines lines = derive_lines(ls);
    require_direction(lines.shoulder_line, "hhd", "shoulder line");
    require_direction(lines.eye_line, "hhd", "eye line");
    return signed_angle_deg(lines.shoulder_line, lines.eye_line);
}

double translational_deformity(const LandmarkSet& ls) {
    require_valid(ls);
    const DerivedLines lines = derive_lines(ls);
    const double canthal_span = norm(lines.outer_canthal);
    if (canthal_span == 0.0) {
        throw DegenerateMeasureError("td", "outer-canthal span");
    }
    require_direction(lines.shoulder_line, "td", "shoulder line");
    const Point2 head_center =
        midpoint(at(ls, lm::kOuterCanthusR), at(ls, lm::kOuterCanthusL));
    return point_line_dist(head_center, lines.plumb) / canthal_span;
}

SymmetryMeasures compute_all(const LandmarkSet& ls) {
    SymmetryMeasures m;
    m.fa = facial_angle(ls);
    m.osa = orbit_slopes_angle(ls);
    m.rfs = relative_face_size(ls);
    m.ga = gaze_angle(ls);
    m.hhd = habitual_head_deviation(ls);
    m.td = translational_deformity(ls);
    return m;
}

}  // namespace posym
