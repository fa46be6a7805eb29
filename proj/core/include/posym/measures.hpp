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

#include <array>
#include <optional>
#include <string_view>

#include "posym/geometry.hpp"
#include "posym/landmarks.hpp"

namespace posym {

// The six face/upper-body symmetry measures. All follow one orientation
// rule: transverse anatomical vectors run subject-right to subject-left,
// the midsternal plumb direction is perp_cw of the shoulder vector, and
// positive angles are clockwise on screen.
//
//   fa   facial angle: eye line vs mouth-corner line, degrees
//   osa  orbit slopes angle: outer-canthal vs inner-canthal line, degrees
//   rfs  relative face size: left over right canthus-to-mouth length
//   ga   gaze angle: outer-canthal line vs midsternal plumb line, degrees
//        (an upright symmetric pose reads +90)
//   hhd  habitual head deviation: shoulder line vs eye line, degrees
//   td   translational deformity: head-center offset from the plumb line
//        over the outer-canthal distance

enum class MeasureId { fa, osa, rfs, ga, hhd, td };

inline constexpr std::array<MeasureId, 6> kAllMeasures = {
    MeasureId::fa, MeasureId::osa, MeasureId::rfs,
    MeasureId::ga, MeasureId::hhd, MeasureId::td,
};

std::string_view to_string(MeasureId id);
std::optional<MeasureId> measure_from_string(std::string_view name);

/// True for the measures expressed in degrees (fa, osa, ga, hhd).
bool is_angle(MeasureId id);

/// Values of all six measures for one landmark set. Angles in degrees in
/// (-180, 180]; rfs > 0; td >= 0.
struct SymmetryMeasures {
    double fa = 0.0;
    double osa = 0.0;
    double rfs = 1.0;
    double ga = 0.0;
    double hhd = 0.0;
    double td = 0.0;
};

double get(const SymmetryMeasures& m, MeasureId id);

/// The anatomical lines the measures are built from.
struct DerivedLines {
    Vec2 eye_line;        // right eye midpoint -> left eye midpoint
    Vec2 outer_canthal;   // P36 -> P45
    Vec2 inner_canthal;   // P39 -> P42
    Vec2 mouth_line;      // P48 -> P54
    Vec2 shoulder_line;   // P68 -> P69
    Line2 plumb;          // anchored at the shoulder midpoint, perp_cw of the shoulder line
};

/// Builds the derived lines without degeneracy checks; directions may be
/// zero for degenerate input.
DerivedLines derive_lines(const LandmarkSet& ls);

// Each measure requires a structurally valid set (validate() with no
// errors) and throws DegenerateMeasureError, naming the collapsed element,
// when a defining line has coincident endpoints.

double facial_angle(const LandmarkSet& ls);
double orbit_slopes_angle(const LandmarkSet& ls);
double relative_face_size(const LandmarkSet& ls);
double gaze_angle(const LandmarkSet& ls);
double habitual_head_deviation(const LandmarkSet& ls);
double translational_deformity(const LandmarkSet& ls);

/// All six measures; identical values to calling each measure individually.
/// Propagates the first degenerate-measure error in field order.
SymmetryMeasures compute_all(const LandmarkSet& ls);

}  // namespace posym
