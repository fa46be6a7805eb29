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

// Acceptance suite: one line per criterion, [PASS]/[FAIL]/[SKIP], nonzero
// exit when any criterion fails.
//
// Usage: posym_acceptance <path-to-posym-cli>

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "posym/dataset.hpp"
#include "posym/error.hpp"
#include "posym/measures.hpp"
#include "posym/metrics.hpp"
#include "posym/report.hpp"
#include "posym/rng.hpp"
#include "posym/synth.hpp"
#include "test_support.hpp"

namespace {

namespace fs = std::filesystem;
namespace pt = posym::testing;
using posym::LandmarkSet;
using posym::MeasureSeries;
using posym::Point2;
using posym::Rng;
using posym::SymmetryMeasures;

int g_failures = 0;

void report(bool ok, const std::string& name, const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) {
        std::cout << ": " << detail;
    }
    std::cout << "\n";
    if (!ok) {
        ++g_failures;
    }
}

void skip(const std::string& name, const std::string& why) {
    std::cout << "[SKIP] " << name << ": " << why << "\n";
}

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

// --------------------------------------------------------------------------
// Criterion 1: symmetric-fixture exactness, under 1 ms.

void criterion_symmetric_fixture() {
    const LandmarkSet f0 = posym::canonical_face();
    SymmetryMeasures m = posym::compute_all(f0);  // warm-up
    double best_ns = 1e18;
    for (int i = 0; i < 5; ++i) {
        const auto start = std::chrono::steady_clock::now();
        m = posym::compute_all(f0);
        const auto stop = std::chrono::steady_clock::now();
        best_ns = std::min(
            best_ns,
            static_cast<double>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
    }
    const bool values_ok = std::abs(m.fa) <= 1e-9 && std::abs(m.osa) <= 1e-9 &&
                           std::abs(m.hhd) <= 1e-9 && std::abs(m.td) <= 1e-9 &&
                           std::abs(m.rfs - 1.0) <= 1e-9 && std::abs(m.ga - 90.0) <= 1e-9;
    const bool time_ok = best_ns < 1e6;
    report(values_ok && time_ok, "symmetric-fixture exactness",
           "fa=" + fmt(m.fa) + " osa=" + fmt(m.osa) + " rfs=" + fmt(m.rfs) + " ga=" + fmt(m.ga) +
               " hhd=" + fmt(m.hhd) + " td=" + fmt(m.td) + ", " + fmt(best_ns / 1e3) + " us");
}

// --------------------------------------------------------------------------
// Criterion 2: head-rotation response on the fixture.

void criterion_head_rotation() {
    const LandmarkSet f0 = posym::canonical_face();
    const Point2 center{160.0, 100.0};
    bool ok = true;
    std::string detail;
    for (double delta : {-20.0, -10.0, -5.0, 5.0, 10.0, 20.0}) {
        const SymmetryMeasures m = posym::compute_all(pt::rotate_face(f0, center, delta));
        const bool step_ok = std::abs(m.hhd - delta) <= 1e-6 &&
                             std::abs(m.ga - (90.0 - delta)) <= 1e-6 &&
                             std::abs(m.fa) <= 1e-9 && std::abs(m.osa) <= 1e-9 &&
                             std::abs(m.rfs - 1.0) <= 1e-9 && std::abs(m.td) <= 1e-9;
        if (!step_ok) {
            ok = false;
            detail = "delta=" + fmt(delta) + " hhd=" + fmt(m.hhd) + " ga=" + fmt(m.ga);
            break;
        }
    }
    report(ok, "head-rotation response",
           ok ? "hhd=delta and ga=90-delta for all six deltas" : detail);
}

// --------------------------------------------------------------------------
// Criterion 3: similarity invariance over 1000 random sets, under 5 s.

void criterion_similarity_invariance() {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<LandmarkSet> faces = pt::random_faces(1000, 2024);
    Rng rng(2025);
    double worst = 0.0;
    for (const LandmarkSet& ls : faces) {
        const SymmetryMeasures base = posym::compute_all(ls);
        const LandmarkSet moved = pt::similarity(
            ls, Point2{rng.uniform(-200, 400), rng.uniform(-200, 400)}, rng.uniform(-180, 180),
            rng.uniform(0.2, 5.0), rng.uniform(-1000, 1000), rng.uniform(-1000, 1000));
        const SymmetryMeasures m = posym::compute_all(moved);
        worst = std::max({worst, std::abs(m.fa - base.fa), std::abs(m.osa - base.osa),
                          std::abs(m.ga - base.ga), std::abs(m.hhd - base.hhd),
                          std::abs(m.rfs - base.rfs) / std::abs(base.rfs),
                          std::abs(m.td - base.td) / std::max(1.0, std::abs(base.td))});
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(worst <= 1e-9 && seconds < 5.0, "similarity invariance",
           "worst deviation " + fmt(worst) + " over 1000 sets in " + fmt(seconds) + " s");
}

// --------------------------------------------------------------------------
// Criterion 4: Spearman against a brute-force oracle, plus exact
// monotone-transform invariance in rank space.

void criterion_spearman_oracle() {
    Rng rng(7);
    double worst = 0.0;
    bool ok = true;
    for (int i = 0; i < 1000 && ok; ++i) {
        const std::size_t n = 2 + rng.index(9);
        std::vector<double> gt(n), pred(n);
        for (double& x : gt) {
            x = (i % 3 != 0) ? static_cast<double>(rng.index(4)) : rng.uniform(-5.0, 5.0);
        }
        for (double& x : pred) {
            x = (i % 2 != 0) ? static_cast<double>(rng.index(4)) : rng.uniform(-5.0, 5.0);
        }
        const auto expected = pt::oracle_spearman(gt, pred);
        const auto actual = posym::spearman_rho(MeasureSeries{"acc", gt, pred});
        if (actual.has_value() != expected.has_value()) {
            ok = false;
            break;
        }
        if (actual) {
            worst = std::max(worst, std::abs(*actual - *expected));
        }

        // Strictly increasing transforms leave the ranks bit-identical.
        std::vector<double> gt_t = gt, pred_t = pred;
        for (double& x : gt_t) x = 2.0 * x + 1.0;
        for (double& x : pred_t) x = x * x * x;
        if (posym::average_ranks(gt_t) != posym::average_ranks(gt) ||
            posym::average_ranks(pred_t) != posym::average_ranks(pred) ||
            posym::spearman_rho(MeasureSeries{"acc", gt_t, pred_t}) != actual) {
            ok = false;
        }
    }
    report(ok && worst <= 1e-12, "spearman oracle equivalence",
           "worst |diff| " + fmt(worst) + " over 1000 vectors; monotone transforms exact");
}

// --------------------------------------------------------------------------
// Criterion 5: metric hand-values. The quoted series [0,0,10,10] vs
// [1,2,20,3] has bca 0.75 and, by direct arithmetic, mae 5.0 and
// rmse sqrt(38.5); mae 3.0 and rmse 2.8284 come from their own worked
// examples ([0,0] vs [3,-3] and [0,0] vs [0,4]).

void criterion_metric_hand_values() {
    const MeasureSeries composite{"comp", {0, 0, 10, 10}, {1, 2, 20, 3}};
    const MeasureSeries mae_example{"mae", {0, 0}, {3, -3}};
    const MeasureSeries rmse_example{"rmse", {0, 0}, {0, 4}};

    bool ok = posym::bca(composite) == 0.75;
    ok = ok && posym::mae(mae_example) == 3.0;
    ok = ok && posym::rmse(mae_example) == 3.0;
    ok = ok && std::abs(posym::rmse(rmse_example) - 2.8284) <= 1e-4;
    ok = ok && posym::rmse(rmse_example) > posym::mae(rmse_example);
    ok = ok && posym::mae(composite) == 5.0;
    ok = ok && std::abs(posym::rmse(composite) - std::sqrt(38.5)) <= 1e-12;

    Rng rng(8);
    for (int i = 0; i < 1000 && ok; ++i) {
        const std::size_t n = 1 + rng.index(16);
        std::vector<double> gt(n), pred(n);
        for (double& x : gt) x = rng.uniform(-20.0, 20.0);
        for (double& x : pred) x = rng.uniform(-20.0, 20.0);
        const MeasureSeries s{"rand", gt, pred};
        ok = posym::rmse(s) + 1e-12 >= posym::mae(s);
    }
    report(ok, "metric hand-values",
           "bca 0.75; mae example 3.0; rmse example 2.8284; quoted series mae 5.0, "
           "rmse sqrt(38.5)=" +
               fmt(std::sqrt(38.5)) + "; rmse>=mae on 1000 random series");
}

// --------------------------------------------------------------------------
// Criterion 6: pipeline self-evaluation through the real CLI.

struct CliRun {
    int exit_code = -1;
    std::string out;
};

CliRun run_cli(const std::string& cli, const std::string& args, const fs::path& log) {
    const std::string command = cli + " " + args + " > " + log.string() + " 2>&1";
    const int status = std::system(command.c_str());
    CliRun result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(log);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    result.out = buffer.str();
    return result;
}

nlohmann::json evaluate_via_cli(const std::string& cli, const fs::path& dir,
                                const std::string& synth_args, bool& ok, std::string& detail) {
    const fs::path data = dir / "data";
    fs::remove_all(data);
    const fs::path log = dir / "log.txt";
    if (run_cli(cli, "synth " + data.string() + " " + synth_args, log).exit_code != 0) {
        ok = false;
        detail = "synth failed";
        return {};
    }
    const fs::path report_path = dir / "report.json";
    if (run_cli(cli,
                "evaluate " + (data / "manifest.csv").string() + " --out " + report_path.string(),
                log)
            .exit_code != 0) {
        ok = false;
        detail = "evaluate failed";
        return {};
    }
    std::ifstream in(report_path);
    return nlohmann::json::parse(in);
}

void criterion_pipeline(const std::string& cli) {
    const auto start = std::chrono::steady_clock::now();
    const pt::TempDir dir("acceptance_pipeline");
    bool ok = true;
    std::string detail;

    // Noiseless: perfect recovery on every measure with gt variance.
    const nlohmann::json clean =
        evaluate_via_cli(cli, dir.path(), "--n 36 --sigma 0 --seed 0", ok, detail);
    if (ok) {
        for (const char* name : {"fa", "osa", "rfs", "ga", "hhd", "td"}) {
            const auto& entry = clean["measures"][name];
            if (entry["spearman_rho"].is_null()) continue;  // no gt variance
            if (entry["spearman_rho"].get<double>() != 1.0 || entry["bca"].get<double>() != 1.0 ||
                entry["mae"].get<double>() != 0.0 || entry["rmse"].get<double>() != 0.0) {
                ok = false;
                detail = std::string("noiseless run imperfect on ") + name;
            }
        }
    }

    // 1% landmark jitter: every defined rho lands in the top band.
    double min_rho = 1.0;
    if (ok) {
        const nlohmann::json jitter =
            evaluate_via_cli(cli, dir.path(), "--n 36 --sigma 1 --seed 0", ok, detail);
        if (ok) {
            for (const char* name : {"fa", "osa", "rfs", "ga", "hhd", "td"}) {
                const auto& entry = jitter["measures"][name];
                if (entry["spearman_rho"].is_null()) continue;
                min_rho = std::min(min_rho, entry["spearman_rho"].get<double>());
                if (entry["spearman_rho"].get<double>() < 0.9 ||
                    entry["rho_band"].get<std::string>() != "very strong") {
                    ok = false;
                    detail = std::string("jitter run rho below 0.9 on ") + name;
                }
            }
        }
    }

    // Gross outliers inflate rmse well past mae on the angle measures.
    if (ok) {
        const nlohmann::json outliers = evaluate_via_cli(
            cli, dir.path(), "--n 36 --sigma 1 --outliers 0.1 --outlier-shift 50 --seed 0", ok,
            detail);
        if (ok) {
            for (const char* name : {"fa", "osa", "hhd"}) {
                const auto& entry = outliers["measures"][name];
                if (entry["rmse"].get<double>() < 1.5 * entry["mae"].get<double>()) {
                    ok = false;
                    detail = std::string("outliers did not inflate rmse/mae on ") + name;
                }
            }
        }
    }

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= 10.0) {
        ok = false;
        detail = "took " + fmt(seconds) + " s";
    }
    report(ok, "pipeline self-evaluation",
           ok ? "noiseless perfect; 1% jitter min rho " + fmt(min_rho) +
                    " (very strong); outliers inflate rmse; " + fmt(seconds) + " s"
              : detail);
}

// --------------------------------------------------------------------------
// Criterion 7: format round-trip fixpoint and manifest duplicate rejection.

void criterion_format_round_trip() {
    Rng rng(9);
    bool ok = true;
    for (int i = 0; i < 50 && ok; ++i) {
        LandmarkSet ls;
        ls.image_id = "rt";
        for (int j = 0; j < posym::landmark::kPointCount; ++j) {
            ls.points.push_back({rng.uniform(-1000.0, 4000.0), rng.uniform(-1000.0, 4000.0)});
        }
        const std::string once = posym::serialize_pts70(ls);
        const std::string twice = posym::serialize_pts70(posym::parse_pts70(once, "rt"));
        const std::string thrice =
            posym::serialize_pts70(posym::parse_pts70(twice, "rt"));
        ok = (once == twice) && (twice == thrice);
    }

    bool dup_ok = false;
    try {
        posym::parse_manifest("image_id,gt_path,pred_path\na,g,p\na,g2,p2\n");
    } catch (const posym::ParseError& e) {
        dup_ok = e.line() == 3 && std::string(e.what()).find("'a'") != std::string::npos;
    }
    report(ok && dup_ok, "format round-trip",
           "serialize/parse fixpoint on 50 random sets; duplicate manifest id rejected with "
           "line number");
}

// --------------------------------------------------------------------------
// Criterion 8 (optional): external annotations, when provided. Expects
// POSYM_EXTERNAL_DATA to name a directory holding manifest.csv with paths
// to converted .pts70 files for the infant-model predictions.

void criterion_external_data() {
    const char* dir = std::getenv("POSYM_EXTERNAL_DATA");
    if (dir == nullptr || !fs::exists(fs::path(dir) / "manifest.csv")) {
        skip("external-data spot check", "POSYM_EXTERNAL_DATA not set; external download absent");
        return;
    }
    try {
        const posym::DatasetManifest manifest =
            posym::read_manifest_file(fs::path(dir) / "manifest.csv");
        const posym::LoadedDataset dataset = posym::load_dataset(manifest, dir);
        const posym::EvalReport rep = posym::evaluate_pairs(dataset.pairs);
        bool ok = true;
        std::string detail;
        for (const posym::EvalRow& row : rep.rows) {
            if (!row.metrics || !row.metrics->spearman_rho) {
                ok = false;
                detail = "undefined metrics on " + std::string(posym::to_string(row.id));
                break;
            }
            const posym::MetricBundle& b = *row.metrics;
            if (row.id == posym::MeasureId::osa) {
                if (std::abs(*b.spearman_rho - 0.36) > 0.01) {
                    ok = false;
                    detail = "osa rho " + fmt(*b.spearman_rho) + " not within 0.36 +/- 0.01";
                }
            } else {
                if (b.bca < 0.75 || b.bca > 0.889 + 1e-9) {
                    ok = false;
                    detail = std::string(posym::to_string(row.id)) + " bca " + fmt(b.bca) +
                             " outside 75.0-88.9%";
                }
            }
            const double mae_cap = posym::is_angle(row.id) ? 3.0 : 0.1;
            if (b.mae > mae_cap) {
                ok = false;
                detail = std::string(posym::to_string(row.id)) + " mae " + fmt(b.mae) +
                         " above " + fmt(mae_cap);
            }
        }
        report(ok, "external-data spot check", detail);
    } catch (const std::exception& e) {
        report(false, "external-data spot check", e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: posym_acceptance <path-to-posym-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];

    criterion_symmetric_fixture();
    criterion_head_rotation();
    criterion_similarity_invariance();
    criterion_spearman_oracle();
    criterion_metric_hand_values();
    criterion_pipeline(cli);
    criterion_format_round_trip();
    criterion_external_data();

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
