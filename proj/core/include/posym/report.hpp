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
#include <string>
#include <vector>

#include "posym/dataset.hpp"
#include "posym/measures.hpp"
#include "posym/metrics.hpp"

namespace posym {

/// Value transforms applied to computed measures before reporting or
/// evaluation. `ga_relative` subtracts 90 from ga so an upright pose reads
/// 0; `abs_angles` replaces the four angle measures by their magnitudes
/// (applied after the relative shift).
struct ValueOptions {
    bool ga_relative = false;
    bool abs_angles = false;
};

SymmetryMeasures apply_options(const SymmetryMeasures& m, const ValueOptions& options);

/// One measure of one set with the options applied. Same errors as the
/// underlying measure.
double measure_value(const LandmarkSet& ls, MeasureId id, const ValueOptions& options = {});

/// A pair excluded from one measure's series, with the reason.
struct MeasureFailure {
    std::string image_id;
    std::string reason;
};

/// Evaluation result for one measure over the dataset.
struct EvalRow {
    MeasureId id{};
    std::size_t n_used = 0;
    std::optional<MetricBundle> metrics;  // absent when the row degenerated
    std::string note;                     // why metrics are absent
    std::vector<MeasureFailure> failures;
    MeasureSeries series;               // the values behind the metrics, manifest order
    std::vector<std::string> image_ids;  // ids of the pairs in `series`
};

/// The full evaluation report: one row per measure plus dataset metadata.
struct EvalReport {
    std::string manifest_path;
    std::size_t n_pairs = 0;
    std::vector<SkippedPair> skipped;
    RhoBands bands;
    ValueOptions options;
    std::array<EvalRow, kAllMeasures.size()> rows;
};

/// Runs all six measures over the pairs and the four metrics over each
/// resulting series. A pair whose gt or pred degenerates on some measure is
/// excluded from that measure only and recorded under `failures`. Rows with
/// fewer than two measurable pairs or an undefined series carry a note
/// instead of metrics. Throws InsufficientSampleError when pairs.size() < 2.
EvalReport evaluate_pairs(const std::vector<LandmarkPair>& pairs,
                          const RhoBands& bands = RhoBands::default_bands(),
                          const ValueOptions& options = {});

/// Aligned six-row table with band labels, values rounded to
/// display_precision decimals (bca shown as a percentage).
std::string render_text(const EvalReport& report, int display_precision = 2);

/// Full-precision comma-separated table, one row per measure.
std::string render_csv(const EvalReport& report);

/// Full-precision structured report with stable key order.
std::string render_json(const EvalReport& report);

}  // namespace posym
