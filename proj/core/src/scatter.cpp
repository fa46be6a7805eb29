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

#include "posym/scatter.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>

#include "posym/error.hpp"

namespace posym {

namespace {

std::string fmt(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::string fmt2(double value) {
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, 2);
    return std::string(buf, ptr);
}

// Tick label: compact general format.
std::string fmtg(double value) {
    char buf[48];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 6);
    return std::string(buf, ptr);
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

void accumulate(const ScatterSeries& series, double& lo, double& hi) {
    for (const ScatterPoint& p : series.points) {
        lo = std::min({lo, p.gt, p.pred});
        hi = std::max({hi, p.gt, p.pred});
    }
}

}  // namespace

ScatterSeries scatter_series(const std::vector<LandmarkPair>& pairs, MeasureId id,
                             const ValueOptions& options) {
    ScatterSeries series;
    series.id = id;
    for (const LandmarkPair& pair : pairs) {
        double gt_value = 0.0, pred_value = 0.0;
        try {
            gt_value = measure_value(pair.gt, id, options);
        } catch (const Error& e) {
            series.failures.push_back({pair.image_id, std::string("gt: ") + e.what()});
            continue;
        }
        try {
            pred_value = measure_value(pair.pred, id, options);
        } catch (const Error& e) {
            series.failures.push_back({pair.image_id, std::string("pred: ") + e.what()});
            continue;
        }
        series.points.push_back({gt_value, pred_value, pair.image_id});
    }
    return series;
}

ScatterLimits scatter_limits(const ScatterSeries& series, const ScatterSeries* overlay) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    accumulate(series, lo, hi);
    if (overlay != nullptr) {
        accumulate(*overlay, lo, hi);
    }
    if (!(lo <= hi)) {
        return {0.0, 1.0};
    }
    const double span = hi - lo;
    const double pad = span > 0.0 ? 0.05 * span : 1.0;
    return {lo - pad, hi + pad};
}

void write_scatter_csv(std::ostream& out, const ScatterSeries& series) {
    out << "gt,pred,image_id\n";
    for (const ScatterPoint& p : series.points) {
        out << fmt(p.gt) << ',' << fmt(p.pred) << ',' << p.image_id << '\n';
    }
}

void write_scatter_svg(std::ostream& out, const ScatterSeries& series,
                       const ScatterSeries* overlay, const std::string& overlay_label) {
    // Fixed canvas; the square plot area plus a shared axis range keeps the
    // two axes at equal scale.
    constexpr double kSize = 640.0;
    constexpr double kMarginLeft = 70.0, kMarginRight = 30.0;
    constexpr double kMarginTop = 50.0, kMarginBottom = 70.0;
    constexpr double kPlot = kSize - kMarginLeft - kMarginRight;  // == height budget
    const ScatterLimits limits = scatter_limits(series, overlay);
    const double scale = kPlot / (limits.hi - limits.lo);

    const auto sx = [&](double v) { return kMarginLeft + (v - limits.lo) * scale; };
    const auto sy = [&](double v) { return kMarginTop + kPlot - (v - limits.lo) * scale; };

    const double x0 = kMarginLeft, x1 = kMarginLeft + kPlot;
    const double y0 = kMarginTop, y1 = kMarginTop + kPlot;

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt2(kSize) << "\" height=\""
        << fmt2(kMarginTop + kPlot + kMarginBottom) << "\" viewBox=\"0 0 " << fmt2(kSize) << ' '
        << fmt2(kMarginTop + kPlot + kMarginBottom) << "\">\n";
    out << "  <title>" << to_string(series.id) << ": predicted vs ground truth</title>\n";
    out << "  <rect x=\"" << fmt2(x0) << "\" y=\"" << fmt2(y0) << "\" width=\"" << fmt2(kPlot)
        << "\" height=\"" << fmt2(kPlot)
        << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";
    // Reference diagonal pred == gt.
    out << "  <line x1=\"" << fmt2(sx(limits.lo)) << "\" y1=\"" << fmt2(sy(limits.lo))
        << "\" x2=\"" << fmt2(sx(limits.hi)) << "\" y2=\"" << fmt2(sy(limits.hi))
        << "\" stroke=\"#999999\" stroke-dasharray=\"6 4\" stroke-width=\"1\"/>\n";

    // Ticks at the limits and the midpoint of the data range.
    const double mid = (limits.lo + limits.hi) / 2.0;
    for (double v : {limits.lo, mid, limits.hi}) {
        out << "  <line x1=\"" << fmt2(sx(v)) << "\" y1=\"" << fmt2(y1) << "\" x2=\""
            << fmt2(sx(v)) << "\" y2=\"" << fmt2(y1 + 6.0)
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        out << "  <text x=\"" << fmt2(sx(v)) << "\" y=\"" << fmt2(y1 + 22.0)
            << "\" font-size=\"12\" text-anchor=\"middle\">" << fmtg(v) << "</text>\n";
        out << "  <line x1=\"" << fmt2(x0 - 6.0) << "\" y1=\"" << fmt2(sy(v)) << "\" x2=\""
            << fmt2(x0) << "\" y2=\"" << fmt2(sy(v))
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        out << "  <text x=\"" << fmt2(x0 - 10.0) << "\" y=\"" << fmt2(sy(v) + 4.0)
            << "\" font-size=\"12\" text-anchor=\"end\">" << fmtg(v) << "</text>\n";
    }

    out << "  <text x=\"" << fmt2(x0 + kPlot / 2.0) << "\" y=\"" << fmt2(y1 + 45.0)
        << "\" font-size=\"14\" text-anchor=\"middle\">ground truth</text>\n";
    out << "  <text x=\"18\" y=\"" << fmt2(y0 + kPlot / 2.0)
        << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << fmt2(y0 + kPlot / 2.0) << ")\">predicted</text>\n";
    out << "  <text x=\"" << fmt2(x0 + kPlot / 2.0) << "\" y=\"30\" font-size=\"16\" "
        << "text-anchor=\"middle\">" << to_string(series.id) << "</text>\n";

    const auto draw_points = [&](const ScatterSeries& s, const char* color) {
        for (const ScatterPoint& p : s.points) {
            out << "  <circle cx=\"" << fmt2(sx(p.gt)) << "\" cy=\"" << fmt2(sy(p.pred))
                << "\" r=\"3.5\" fill=\"" << color << "\" fill-opacity=\"0.75\">"
                << "<title>" << xml_escape(p.image_id) << " (" << fmt(p.gt) << ", " << fmt(p.pred)
                << ")</title></circle>\n";
        }
    };
    draw_points(series, "#1f6fb4");
    if (overlay != nullptr) {
        draw_points(*overlay, "#d97706");
        out << "  <circle cx=\"" << fmt2(x1 - 150.0) << "\" cy=\"" << fmt2(y0 + 16.0)
            << "\" r=\"3.5\" fill=\"#1f6fb4\"/>\n";
        out << "  <text x=\"" << fmt2(x1 - 140.0) << "\" y=\"" << fmt2(y0 + 20.0)
            << "\" font-size=\"12\">" << to_string(series.id) << "</text>\n";
        out << "  <circle cx=\"" << fmt2(x1 - 150.0) << "\" cy=\"" << fmt2(y0 + 34.0)
            << "\" r=\"3.5\" fill=\"#d97706\"/>\n";
        out << "  <text x=\"" << fmt2(x1 - 140.0) << "\" y=\"" << fmt2(y0 + 38.0)
            << "\" font-size=\"12\">" << xml_escape(overlay_label) << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace posym
