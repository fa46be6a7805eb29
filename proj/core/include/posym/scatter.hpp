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

#include <iosfwd>
#include <string>
#include <vector>

#include "posym/report.hpp"

namespace posym {

struct ScatterPoint {
    double gt = 0.0;
    double pred = 0.0;
    std::string image_id;
};

/// Predicted-vs-ground-truth values of one measure, one point per
/// successfully measured pair.
struct ScatterSeries {
    MeasureId id{};
    std::vector<ScatterPoint> points;
    std::vector<MeasureFailure> failures;
};

ScatterSeries scatter_series(const std::vector<LandmarkPair>& pairs, MeasureId id,
                             const ValueOptions& options = {});

/// Shared axis range for both axes: min/max over all gt and pred values
/// padded by 5% of the span on each side (by 1.0 when the span is zero).
struct ScatterLimits {
    double lo = 0.0;
    double hi = 1.0;
};

ScatterLimits scatter_limits(const ScatterSeries& series,
                             const ScatterSeries* overlay = nullptr);

/// `gt,pred,image_id` rows, full precision, LF endings.
void write_scatter_csv(std::ostream& out, const ScatterSeries& series);

/// Self-contained static SVG: square plot area (so equal ranges mean equal
/// scales), reference diagonal, round markers with the image id as tooltip.
/// An optional overlay series is drawn in a second color with a legend.
/// Output is byte-deterministic.
void write_scatter_svg(std::ostream& out, const ScatterSeries& series,
                       const ScatterSeries* overlay = nullptr,
                       const std::string& overlay_label = "overlay");

}  // namespace posym
