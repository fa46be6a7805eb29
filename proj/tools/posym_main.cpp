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

// Batch CLI for the posym library: validate and measure .pts70 landmark
// files, evaluate prediction manifests, emit scatter tables/plots, and
// generate synthetic fixture datasets.
//
// Exit codes: 0 success, 1 data error, 2 usage error.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "posym/config.hpp"
#include "posym/dataset.hpp"
#include "posym/error.hpp"
#include "posym/measures.hpp"
#include "posym/report.hpp"
#include "posym/scatter.hpp"
#include "posym/synth.hpp"
#include "posym/version.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsageError = 2;

// CLI-level misuse detected after CLI11 parsing (e.g. a bad measure name).
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string fmt_fixed(double value, int precision) {
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, precision);
    if (ec != std::errc{}) return "?";
    return std::string(buf, ptr);
}

std::string fmt_full(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

void write_output(const std::optional<std::string>& out_path, const std::string& content) {
    if (!out_path) {
        std::cout << content;
        return;
    }
    std::ofstream out(*out_path, std::ios::binary);
    if (!out) {
        throw posym::Error("cannot open " + *out_path + " for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw posym::Error("write failed on " + *out_path);
    }
}

struct ValidateOptions {
    std::vector<std::string> files;
    bool quiet = false;
};

int run_validate(const ValidateOptions& options) {
    bool any_error = false;
    for (const std::string& file : options.files) {
        posym::LandmarkSet ls;
        try {
            ls = posym::read_pts70_file(file);
        } catch (const posym::Error& e) {
            std::cout << file << ": error: " << e.what() << "\n";
            any_error = true;
            continue;
        }
        const posym::ValidationReport report = posym::validate(ls);
        for (const std::string& err : report.errors) {
            std::cout << file << ": error: " << err << "\n";
        }
        for (const std::string& warning : report.warnings) {
            std::cout << file << ": warning: " << warning << "\n";
        }
        if (!report.ok()) {
            any_error = true;
        } else if (report.warnings.empty() && !options.quiet) {
            std::cout << file << ": ok\n";
        }
    }
    return any_error ? kExitDataError : kExitOk;
}

struct MeasureOptions {
    std::vector<std::string> files;
    std::string format = "text";
    std::optional<std::string> out_path;
    std::optional<std::string> config_path;
    posym::ValueOptions values;
    bool relative_set = false;
    bool abs_set = false;
    int display_precision = 2;
};

int run_measure(MeasureOptions options) {
    if (options.config_path) {
        const posym::Config config = posym::load_config_file(*options.config_path);
        options.display_precision = config.display_precision;
        if (!options.relative_set) options.values.ga_relative = config.ga_relative;
    }

    struct Row {
        std::string id;
        posym::SymmetryMeasures m;
    };
    std::vector<Row> rows;
    bool any_error = false;
    for (const std::string& file : options.files) {
        try {
            const posym::LandmarkSet ls = posym::read_pts70_file(file);
            posym::require_valid(ls);
            rows.push_back(
                {ls.image_id, posym::apply_options(posym::compute_all(ls), options.values)});
        } catch (const posym::Error& e) {
            std::cerr << file << ": error: " << e.what() << "\n";
            any_error = true;
        }
    }

    std::string content;
    if (options.format == "csv") {
        content = "image_id,fa,osa,rfs,ga,hhd,td\n";
        for (const Row& row : rows) {
            content += row.id;
            for (posym::MeasureId id : posym::kAllMeasures) {
                content += ',';
                content += fmt_full(posym::get(row.m, id));
            }
            content += '\n';
        }
    } else if (options.format == "json") {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const Row& row : rows) {
            nlohmann::ordered_json entry;
            entry["image_id"] = row.id;
            for (posym::MeasureId id : posym::kAllMeasures) {
                entry[std::string(posym::to_string(id))] = posym::get(row.m, id);
            }
            doc.push_back(std::move(entry));
        }
        content = doc.dump(2) + "\n";
    } else if (options.format == "text") {
        std::size_t id_width = 8;
        for (const Row& row : rows) {
            id_width = std::max(id_width, row.id.size());
        }
        content = "image_id";
        content.append(id_width - 8 + 2, ' ');
        for (posym::MeasureId id : posym::kAllMeasures) {
            std::string cell(posym::to_string(id));
            cell.insert(cell.begin(), 10 - cell.size(), ' ');
            content += cell;
        }
        content += '\n';
        for (const Row& row : rows) {
            content += row.id;
            content.append(id_width - row.id.size() + 2, ' ');
            for (posym::MeasureId id : posym::kAllMeasures) {
                std::string cell = fmt_fixed(posym::get(row.m, id), options.display_precision);
                if (cell.size() < 10) cell.insert(cell.begin(), 10 - cell.size(), ' ');
                content += cell;
            }
            content += '\n';
        }
    } else {
        throw UsageError("unknown format '" + options.format + "' (expected text, csv, or json)");
    }
    write_output(options.out_path, content);
    return any_error ? kExitDataError : kExitOk;
}

struct EvaluateOptions {
    std::string manifest_path;
    std::optional<std::string> base_dir;
    std::optional<std::string> config_path;
    std::optional<std::string> out_path;
    std::string format = "text";
    bool skip_bad = false;
    posym::ValueOptions values;
    bool relative_set = false;
};

posym::EvalReport build_report(const EvaluateOptions& options, const posym::Config& config) {
    posym::ValueOptions values = options.values;
    if (!options.relative_set) values.ga_relative = config.ga_relative;

    const posym::DatasetManifest manifest = posym::read_manifest_file(options.manifest_path);
    const fs::path base_dir =
        options.base_dir ? fs::path(*options.base_dir) : fs::path(options.manifest_path).parent_path();
    posym::LoadedDataset dataset = posym::load_dataset(manifest, base_dir, options.skip_bad);

    posym::EvalReport report = posym::evaluate_pairs(dataset.pairs, config.bands, values);
    report.manifest_path = options.manifest_path;
    report.skipped = std::move(dataset.skipped);
    return report;
}

int run_evaluate(const EvaluateOptions& options) {
    posym::Config config;
    if (options.config_path) {
        config = posym::load_config_file(*options.config_path);
    }
    const posym::EvalReport report = build_report(options, config);

    std::string rendered;
    if (options.format == "text") {
        rendered = posym::render_text(report, config.display_precision);
    } else if (options.format == "csv") {
        rendered = posym::render_csv(report);
    } else if (options.format == "json") {
        rendered = posym::render_json(report);
    } else {
        throw UsageError("unknown format '" + options.format + "' (expected text, csv, or json)");
    }
    std::cout << rendered;

    if (options.out_path) {
        write_output(options.out_path, posym::render_json(report));
    }
    return kExitOk;
}

struct ScatterOptions {
    std::string manifest_path;
    std::string measure_name;
    std::optional<std::string> base_dir;
    std::optional<std::string> out_path;
    std::optional<std::string> overlay_manifest;
    std::optional<std::string> config_path;
    std::string format;
    bool skip_bad = false;
    posym::ValueOptions values;
    bool relative_set = false;
};

int run_scatter(ScatterOptions options) {
    if (options.config_path && !options.relative_set) {
        options.values.ga_relative = posym::load_config_file(*options.config_path).ga_relative;
    }
    const std::optional<posym::MeasureId> id = posym::measure_from_string(options.measure_name);
    if (!id) {
        std::string names;
        for (posym::MeasureId m : posym::kAllMeasures) {
            if (!names.empty()) names += ", ";
            names += std::string(posym::to_string(m));
        }
        throw UsageError("unknown measure '" + options.measure_name + "' (expected one of " +
                         names + ")");
    }

    std::string format = options.format;
    if (format.empty()) {
        format = options.out_path && fs::path(*options.out_path).extension() == ".svg" ? "svg"
                                                                                       : "csv";
    }
    if (format != "csv" && format != "svg") {
        throw UsageError("unknown format '" + format + "' (expected csv or svg)");
    }
    if (options.overlay_manifest && format != "svg") {
        throw UsageError("--overlay requires svg output");
    }

    const auto load_series = [&](const std::string& manifest_path) {
        const posym::DatasetManifest manifest = posym::read_manifest_file(manifest_path);
        const fs::path base_dir =
            options.base_dir ? fs::path(*options.base_dir) : fs::path(manifest_path).parent_path();
        const posym::LoadedDataset dataset =
            posym::load_dataset(manifest, base_dir, options.skip_bad);
        return posym::scatter_series(dataset.pairs, *id, options.values);
    };

    const posym::ScatterSeries series = load_series(options.manifest_path);
    std::optional<posym::ScatterSeries> overlay;
    if (options.overlay_manifest) {
        overlay = load_series(*options.overlay_manifest);
    }

    std::ostringstream out;
    if (format == "csv") {
        posym::write_scatter_csv(out, series);
    } else {
        posym::write_scatter_svg(out, series, overlay ? &*overlay : nullptr,
                                 options.overlay_manifest
                                     ? fs::path(*options.overlay_manifest).stem().string()
                                     : "overlay");
    }
    write_output(options.out_path, out.str());
    return kExitOk;
}

struct SynthOptions {
    std::string out_dir;
    posym::SynthParams params;
};

int run_synth(const SynthOptions& options) {
    const posym::SynthDataset dataset = posym::generate_dataset(options.params);
    posym::write_dataset(dataset, options.out_dir);
    std::cout << "wrote " << dataset.pairs.size() << " pairs under " << options.out_dir << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"face/upper-body symmetry measures from 70-point landmark files"};
    app.set_version_flag("--version", std::string("posym ") + posym::kVersionString);
    app.require_subcommand(1);

    ValidateOptions validate_options;
    CLI::App* validate_cmd =
        app.add_subcommand("validate", "Check .pts70 files for structural errors and warnings");
    validate_cmd->add_option("files", validate_options.files, ".pts70 files")->required();
    validate_cmd->add_flag("--quiet", validate_options.quiet, "Suppress per-file ok lines");

    MeasureOptions measure_options;
    CLI::App* measure_cmd =
        app.add_subcommand("measure", "Compute the six symmetry measures per file");
    measure_cmd->add_option("files", measure_options.files, ".pts70 files")->required();
    measure_cmd->add_option("--format", measure_options.format, "text, csv, or json");
    measure_cmd->add_option("--out", measure_options.out_path, "Write output to a file");
    measure_cmd->add_option("--config", measure_options.config_path, "Config file");
    CLI::Option* measure_relative =
        measure_cmd->add_flag("--relative", measure_options.values.ga_relative,
                              "Report ga relative to the upright +90 pose");
    measure_cmd->add_flag("--abs", measure_options.values.abs_angles,
                          "Report absolute angle values");

    EvaluateOptions evaluate_options;
    CLI::App* evaluate_cmd =
        app.add_subcommand("evaluate", "Evaluate predictions against ground truth per manifest");
    evaluate_cmd->add_option("manifest", evaluate_options.manifest_path, "Manifest file")
        ->required();
    evaluate_cmd->add_option("--base-dir", evaluate_options.base_dir,
                             "Directory the manifest paths are relative to");
    evaluate_cmd->add_option("--config", evaluate_options.config_path, "Config file");
    evaluate_cmd->add_option("--out", evaluate_options.out_path, "Write the JSON report here");
    evaluate_cmd->add_option("--format", evaluate_options.format, "text, csv, or json");
    evaluate_cmd->add_flag("--skip-bad", evaluate_options.skip_bad,
                           "Skip entries that fail to load instead of aborting");
    CLI::Option* evaluate_relative =
        evaluate_cmd->add_flag("--relative", evaluate_options.values.ga_relative,
                               "Evaluate ga relative to the upright +90 pose");
    evaluate_cmd->add_flag("--abs", evaluate_options.values.abs_angles,
                           "Evaluate absolute angle values");

    ScatterOptions scatter_options;
    CLI::App* scatter_cmd =
        app.add_subcommand("scatter", "Emit predicted-vs-ground-truth scatter data or SVG");
    scatter_cmd->add_option("manifest", scatter_options.manifest_path, "Manifest file")
        ->required();
    scatter_cmd->add_option("measure", scatter_options.measure_name,
                            "Measure name (fa, osa, rfs, ga, hhd, td)")
        ->required();
    scatter_cmd->add_option("--base-dir", scatter_options.base_dir,
                            "Directory the manifest paths are relative to");
    scatter_cmd->add_option("--out", scatter_options.out_path, "Output file");
    scatter_cmd->add_option("--format", scatter_options.format,
                            "csv or svg (default: by --out extension, else csv)");
    scatter_cmd->add_option("--overlay", scatter_options.overlay_manifest,
                            "Second manifest drawn in a second color (svg only)");
    scatter_cmd->add_option("--config", scatter_options.config_path, "Config file");
    scatter_cmd->add_flag("--skip-bad", scatter_options.skip_bad,
                          "Skip entries that fail to load instead of aborting");
    CLI::Option* scatter_relative =
        scatter_cmd->add_flag("--relative", scatter_options.values.ga_relative,
                              "Plot ga relative to the upright +90 pose");
    scatter_cmd->add_flag("--abs", scatter_options.values.abs_angles,
                          "Plot absolute angle values");

    SynthOptions synth_options;
    CLI::App* synth_cmd =
        app.add_subcommand("synth", "Generate a synthetic .pts70 dataset with a manifest");
    synth_cmd->add_option("out_dir", synth_options.out_dir, "Output directory")->required();
    synth_cmd->add_option("--n", synth_options.params.n, "Number of pairs")
        ->check(CLI::PositiveNumber);
    synth_cmd
        ->add_option("--sigma", synth_options.params.noise_sigma_pct,
                     "Prediction noise sigma, % of the outer-canthal distance")
        ->check(CLI::NonNegativeNumber);
    synth_cmd
        ->add_option("--outliers", synth_options.params.outlier_fraction,
                     "Fraction of images with grossly displaced predictions")
        ->check(CLI::Range(0.0, 1.0));
    synth_cmd
        ->add_option("--outlier-shift", synth_options.params.outlier_shift_px,
                     "Gross displacement magnitude in pixels")
        ->check(CLI::NonNegativeNumber);
    synth_cmd->add_option("--max-rotation", synth_options.params.max_head_rotation_deg,
                          "Max |head rotation| in degrees");
    synth_cmd->add_option("--max-offset", synth_options.params.max_lateral_offset_px,
                          "Max |lateral head offset| in pixels");
    synth_cmd->add_option("--max-mouth", synth_options.params.max_mouth_shift_px,
                          "Max |mouth-corner shift| in pixels");
    synth_cmd->add_option("--max-canthal", synth_options.params.max_canthal_tilt_px,
                          "Max |inner-canthal tilt| in pixels");
    synth_cmd->add_option("--max-shoulder-tilt", synth_options.params.max_shoulder_tilt_deg,
                          "Max |shoulder tilt| in degrees");
    synth_cmd->add_option("--seed", synth_options.params.seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsageError;
    }

    measure_options.relative_set = measure_relative->count() > 0;
    evaluate_options.relative_set = evaluate_relative->count() > 0;
    scatter_options.relative_set = scatter_relative->count() > 0;

    try {
        if (*validate_cmd) return run_validate(validate_options);
        if (*measure_cmd) return run_measure(measure_options);
        if (*evaluate_cmd) return run_evaluate(evaluate_options);
        if (*scatter_cmd) return run_scatter(scatter_options);
        if (*synth_cmd) return run_synth(synth_options);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    }
    return kExitOk;
}
