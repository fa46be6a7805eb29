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

#include "posym/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "posym/error.hpp"

namespace posym {

namespace {

double transform_value(MeasureId id, double value, const ValueOptions& options) {
    if (id == MeasureId::ga && options.ga_relative) {
        value -= 90.0;
    }
    if (options.abs_angles && is_angle(id)) {
        value = std::abs(value);
    }
    return value;
}

std::string fmt_full(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::string fmt_fixed(double value, int precision) {
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, precision);
    if (ec != std::errc{}) {
        return fmt_full(value);
    }
    return std::string(buf, ptr);
}

void pad_to(std::string& line, std::size_t column) {
    if (line.size() < column) {
        line.append(column - line.size(), ' ');
    } else {
        line += ' ';
    }
}

}  // namespace

double measure_value(const LandmarkSet& ls, MeasureId id, const ValueOptions& options) {
    double raw = 0.0;
    switch (id) {
        case MeasureId::fa: raw = facial_angle(ls); break;
        case MeasureId::osa: raw = orbit_slopes_angle(ls); break;
        case MeasureId::rfs: raw = relative_face_size(ls); break;
        case MeasureId::ga: raw = gaze_angle(ls); break;
        case MeasureId::hhd: raw = habitual_head_deviation(ls); break;
        case MeasureId::td: raw = translational_deformity(ls); break;
    }
    return transform_value(id, raw, options);
}

SymmetryMeasures apply_options(const SymmetryMeasures& m, const ValueOptions& options) {
    SymmetryMeasures out = m;
    out.fa = transform_value(MeasureId::fa, m.fa, options);
    out.osa = transform_value(MeasureId::osa, m.osa, options);
    out.rfs = transform_value(MeasureId::rfs, m.rfs, options);
    out.ga = transform_value(MeasureId::ga, m.ga, options);
    out.hhd = transform_value(MeasureId::hhd, m.hhd, options);
    out.td = transform_value(MeasureId::td, m.td, options);
    return out;
}

EvalReport evaluate_pairs(const std::vector<LandmarkPair>& pairs, const RhoBands& bands,
                          const ValueOptions& options) {
    if (pairs.size() < 2) {
        throw InsufficientSampleError("evaluation needs at least 2 pairs, got " +
                                      std::to_string(pairs.size()));
    }

    EvalReport report;
    report.n_pairs = pairs.size();
    report.bands = bands;
    report.options = options;

    for (std::size_t m = 0; m < kAllMeasures.size(); ++m) {
        const MeasureId id = kAllMeasures[m];
        EvalRow& row = report.rows[m];
        row.id = id;
        row.series.measure_name = std::string(to_string(id));

        for (const LandmarkPair& pair : pairs) {
            double gt_value = 0.0;
            try {
                gt_value = measure_value(pair.gt, id, options);
            } catch (const Error& e) {
                row.failures.push_back({pair.image_id, std::string("gt: ") + e.what()});
                continue;
            }
            double pred_value = 0.0;
            try {
                pred_value = measure_value(pair.pred, id, options);
            } catch (const Error& e) {
                row.failures.push_back({pair.image_id, std::string("pred: ") + e.what()});
                continue;
            }
            row.series.gt.push_back(gt_value);
            row.series.pred.push_back(pred_value);
            row.image_ids.push_back(pair.image_id);
        }

        row.n_used = row.series.gt.size();
        if (row.n_used < 2) {
            row.note = "only " + std::to_string(row.n_used) + " of " +
                       std::to_string(pairs.size()) + " pairs measurable";
        } else {
            row.metrics = evaluate_series(row.series, bands);
        }
    }
    return report;
}

std::string render_text(const EvalReport& report, int display_precision) {
    // Column starts chosen for six-char measure names and 36-pair counts.
    constexpr std::size_t kN = 9, kRho = 14, kBand = 22, kBca = 36, kMae = 46, kRmse = 56;
    std::string out;
    {
        std::string line = "measure";
        pad_to(line, kN);
        line += "n";
        pad_to(line, kRho);
        line += "rho";
        pad_to(line, kBand);
        line += "band";
        pad_to(line, kBca);
        line += "bca";
        pad_to(line, kMae);
        line += "mae";
        pad_to(line, kRmse);
        line += "rmse";
        out += line;
        out += '\n';
    }
    for (const EvalRow& row : report.rows) {
        std::string line(to_string(row.id));
        pad_to(line, kN);
        line += std::to_string(row.n_used);
        if (!row.metrics) {
            pad_to(line, kRho);
            line += "- (" + row.note + ")";
            out += line;
            out += '\n';
            continue;
        }
        const MetricBundle& b = *row.metrics;
        pad_to(line, kRho);
        line += b.spearman_rho ? fmt_fixed(*b.spearman_rho, display_precision) : "-";
        pad_to(line, kBand);
        line += b.rho_band;
        pad_to(line, kBca);
        line += fmt_fixed(100.0 * b.bca, 1) + "%";
        pad_to(line, kMae);
        line += fmt_fixed(b.mae, display_precision);
        pad_to(line, kRmse);
        line += fmt_fixed(b.rmse, display_precision);
        out += line;
        out += '\n';
    }
    if (!report.skipped.empty()) {
        out += "skipped " + std::to_string(report.skipped.size()) + " of " +
               std::to_string(report.n_pairs + report.skipped.size()) + " entries:\n";
        for (const SkippedPair& skip : report.skipped) {
            out += "  " + skip.image_id + ": " + skip.reason + "\n";
        }
    }
    return out;
}

std::string render_csv(const EvalReport& report) {
    std::string out = "measure,n,spearman_rho,rho_band,bca,mae,rmse,note\n";
    for (const EvalRow& row : report.rows) {
        out += std::string(to_string(row.id)) + "," + std::to_string(row.n_used) + ",";
        if (row.metrics) {
            const MetricBundle& b = *row.metrics;
            out += (b.spearman_rho ? fmt_full(*b.spearman_rho) : "") + "," + b.rho_band + "," +
                   fmt_full(b.bca) + "," + fmt_full(b.mae) + "," + fmt_full(b.rmse) + ",";
        } else {
            out += ",,,,," + row.note;
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const EvalReport& report) {
    nlohmann::ordered_json doc;
    doc["dataset"] = {
        {"manifest", report.manifest_path},
        {"n_pairs", report.n_pairs},
    };
    auto& skipped = doc["dataset"]["skipped"] = nlohmann::ordered_json::array();
    for (const SkippedPair& skip : report.skipped) {
        skipped.push_back({{"image_id", skip.image_id}, {"reason", skip.reason}});
    }
    doc["options"] = {
        {"ga_relative", report.options.ga_relative},
        {"abs_angles", report.options.abs_angles},
    };
    auto& bands = doc["rho_bands"] = nlohmann::ordered_json::array();
    for (const RhoBands::Band& band : report.bands.bands) {
        bands.push_back({{"upper", band.upper}, {"label", band.label}});
    }
    auto& measures = doc["measures"] = nlohmann::ordered_json::object();
    for (const EvalRow& row : report.rows) {
        nlohmann::ordered_json entry;
        entry["n"] = row.n_used;
        if (row.metrics) {
            const MetricBundle& b = *row.metrics;
            if (b.spearman_rho) {
                entry["spearman_rho"] = *b.spearman_rho;
            } else {
                entry["spearman_rho"] = nullptr;
            }
            entry["rho_band"] = b.rho_band;
            entry["bca"] = b.bca;
            entry["mae"] = b.mae;
            entry["rmse"] = b.rmse;
        } else {
            entry["error"] = row.note;
        }
        auto& values = entry["values"] = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < row.n_used; ++i) {
            values.push_back({{"image_id", row.image_ids[i]},
                              {"gt", row.series.gt[i]},
                              {"pred", row.series.pred[i]}});
        }
        auto& failures = entry["failures"] = nlohmann::ordered_json::array();
        for (const MeasureFailure& failure : row.failures) {
            failures.push_back({{"image_id", failure.image_id}, {"reason", failure.reason}});
        }
        measures[std::string(to_string(row.id))] = std::move(entry);
    }
    return doc.dump(2) + "\n";
}

}  // namespace posym
