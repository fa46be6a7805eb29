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

#include "posym/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "posym/error.hpp"

namespace posym {

namespace {

void require_series(const MeasureSeries& s, std::size_t min_n) {
    if (s.gt.size() != s.pred.size()) {
        throw Error("series '" + s.measure_name + "': gt has " + std::to_string(s.gt.size()) +
                    " values, pred has " + std::to_string(s.pred.size()));
    }
    if (s.gt.size() < min_n) {
        throw InsufficientSampleError("series '" + s.measure_name + "': need at least " +
                                      std::to_string(min_n) + " samples, got " +
                                      std::to_string(s.gt.size()));
    }
    for (std::size_t i = 0; i < s.gt.size(); ++i) {
        if (!std::isfinite(s.gt[i]) || !std::isfinite(s.pred[i])) {
            throw Error("series '" + s.measure_name + "': non-finite value at index " +
                        std::to_string(i));
        }
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/// Pearson correlation via centered sums; empty when either variance is zero.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    const double mean_x = std::reduce(x.begin(), x.end(), 0.0) / static_cast<double>(n);
    const double mean_y = std::reduce(y.begin(), y.end(), 0.0) / static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        return std::nullopt;
    }
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace

RhoBands RhoBands::default_bands() {
    return RhoBands{{{0.2, "very weak"},
                     {0.4, "weak"},
                     {0.6, "moderate"},
                     {0.8, "strong"},
                     {1.0, "very strong"}}};
}

RhoBands RhoBands::parse(std::string_view text) {
    RhoBands result;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string_view entry = trim(text.substr(start, comma - start));
        if (entry.empty()) {
            throw Error("rho bands: empty entry");
        }
        const std::size_t space = entry.find(' ');
        if (space == std::string_view::npos) {
            throw Error("rho bands: expected '<edge> <label>', got '" + std::string(entry) + "'");
        }
        const std::string_view edge_text = entry.substr(0, space);
        double edge = 0.0;
        const auto [ptr, ec] =
            std::from_chars(edge_text.data(), edge_text.data() + edge_text.size(), edge);
        if (ec != std::errc{} || ptr != edge_text.data() + edge_text.size()) {
            throw Error("rho bands: bad edge '" + std::string(edge_text) + "'");
        }
        result.bands.push_back({edge, std::string(trim(entry.substr(space + 1)))});
        if (comma == text.size()) break;
        start = comma + 1;
    }
    for (std::size_t i = 0; i < result.bands.size(); ++i) {
        const auto& band = result.bands[i];
        if (band.label.empty()) {
            throw Error("rho bands: empty label");
        }
        if (band.upper <= 0.0 || band.upper > 1.0 ||
            (i > 0 && band.upper <= result.bands[i - 1].upper)) {
            throw Error("rho bands: edges must ascend within (0, 1]");
        }
    }
    if (result.bands.empty() || result.bands.back().upper != 1.0) {
        throw Error("rho bands: last edge must be 1.0");
    }
    return result;
}

std::string RhoBands::to_string() const {
    std::string out;
    char buf[32];
    for (std::size_t i = 0; i < bands.size(); ++i) {
        if (i > 0) out += ", ";
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), bands[i].upper);
        out.append(buf, ptr);
        out += ' ';
        out += bands[i].label;
    }
    return out;
}

const std::string& classify_rho(double rho, const RhoBands& bands) {
    if (!(rho >= -1.0 && rho <= 1.0)) {
        throw std::domain_error("classify_rho: rho outside [-1, 1]");
    }
    const double magnitude = std::abs(rho);
    for (std::size_t i = 0; i + 1 < bands.bands.size(); ++i) {
        if (magnitude < bands.bands[i].upper) {
            return bands.bands[i].label;
        }
    }
    return bands.bands.back().label;
}

std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) {
            ++j;
        }
        // Tie group spans 1-based ranks i+1 .. j+1; everyone gets the mean.
        const double rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) {
            ranks[order[k]] = rank;
        }
        i = j + 1;
    }
    return ranks;
}

std::optional<double> spearman_rho(const MeasureSeries& s) {
    require_series(s, 2);
    const std::vector<double> gt_ranks = average_ranks(s.gt);
    const std::vector<double> pred_ranks = average_ranks(s.pred);
    return pearson(gt_ranks, pred_ranks);
}

double bca(const MeasureSeries& s) {
    require_series(s, 1);
    const double mu =
        std::reduce(s.gt.begin(), s.gt.end(), 0.0) / static_cast<double>(s.gt.size());
    std::size_t agree = 0;
    for (std::size_t i = 0; i < s.gt.size(); ++i) {
        if ((s.pred[i] > mu) == (s.gt[i] > mu)) {
            ++agree;
        }
    }
    return static_cast<double>(agree) / static_cast<double>(s.gt.size());
}

double mae(const MeasureSeries& s) {
    require_series(s, 1);
    double sum = 0.0;
    for (std::size_t i = 0; i < s.gt.size(); ++i) {
        sum += std::abs(s.pred[i] - s.gt[i]);
    }
    return sum / static_cast<double>(s.gt.size());
}

double rmse(const MeasureSeries& s) {
    require_series(s, 1);
    double sum = 0.0;
    for (std::size_t i = 0; i < s.gt.size(); ++i) {
        const double d = s.pred[i] - s.gt[i];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(s.gt.size()));
}

MetricBundle evaluate_series(const MeasureSeries& s, const RhoBands& bands) {
    require_series(s, 2);
    MetricBundle bundle;
    bundle.spearman_rho = spearman_rho(s);
    bundle.bca = bca(s);
    bundle.mae = mae(s);
    bundle.rmse = rmse(s);
    bundle.rho_band = bundle.spearman_rho ? classify_rho(*bundle.spearman_rho, bands) : "undefined";
    return bundle;
}

}  // namespace posym
