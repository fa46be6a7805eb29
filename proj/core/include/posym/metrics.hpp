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

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace posym {

/// Paired ground-truth and predicted values of one measure over a dataset.
/// Both vectors must have the same length n >= 1 and hold finite values.
struct MeasureSeries {
    std::string measure_name;
    std::vector<double> gt;
    std::vector<double> pred;
};

/// Interpretation bands for |rho|, ascending upper edges with the last edge
/// at 1.0. Each edge is exclusive except the last, so the defaults read
/// [0, 0.2) very weak, [0.2, 0.4) weak, ..., [0.8, 1.0] very strong.
struct RhoBands {
    struct Band {
        double upper;
        std::string label;
    };
    std::vector<Band> bands;

    static RhoBands default_bands();

    /// Parses "0.2 very weak, 0.4 weak, 0.6 moderate, 0.8 strong, 1.0 very strong".
    /// Throws Error on non-ascending edges, a last edge != 1.0, or an empty label.
    static RhoBands parse(std::string_view text);

    std::string to_string() const;
};

/// Classifies |rho| into a band label. Throws std::domain_error outside [-1, 1].
const std::string& classify_rho(double rho, const RhoBands& bands = RhoBands::default_bands());

/// The four prediction-quality metrics plus the band label for rho.
/// spearman_rho is empty when either rank vector has zero variance; the
/// band label then reads "undefined".
struct MetricBundle {
    std::optional<double> spearman_rho;
    double bca = 0.0;
    double mae = 0.0;
    double rmse = 0.0;
    std::string rho_band;
};

/// Fractional (average) ranks, 1-based: the smallest value gets rank 1 and
/// tied values share the mean of the ranks they span. The output always
/// sums to n(n+1)/2 exactly.
std::vector<double> average_ranks(std::span<const double> values);

/// Spearman's rank correlation: Pearson correlation of the average ranks of
/// gt and pred. Returns empty when either rank vector has zero variance.
/// Throws InsufficientSampleError for n < 2.
std::optional<double> spearman_rho(const MeasureSeries& s);

/// Binary classification accuracy: the proportion of samples for which
/// pred > mean(gt) agrees with gt > mean(gt), both strict.
double bca(const MeasureSeries& s);

/// Mean absolute error of pred against gt.
double mae(const MeasureSeries& s);

/// Root mean squared error of pred against gt; always >= mae.
double rmse(const MeasureSeries& s);

/// All four metrics plus the rho band; each field equals its standalone
/// operation's output. Throws InsufficientSampleError for n < 2.
MetricBundle evaluate_series(const MeasureSeries& s,
                             const RhoBands& bands = RhoBands::default_bands());

}  // namespace posym
