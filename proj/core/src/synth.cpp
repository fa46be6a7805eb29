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

#include "posym/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include "posym/error.hpp"
#include "posym/geometry.hpp"
#include "posym/measures.hpp"
#include "posym/rng.hpp"

namespace posym {

namespace {

namespace lm = landmark;

// Integer-coordinate schematic face, exactly mirror symmetric about x=160.
constexpr double kFacePoints[lm::kPointCount][2] = {
    // Jaw 0-16.
    {75, 100}, {78, 130}, {83, 160}, {92, 188}, {105, 210}, {120, 226}, {136, 238},
    {148, 246}, {160, 249}, {172, 246}, {184, 238}, {200, 226}, {215, 210}, {228, 188},
    {237, 160}, {242, 130}, {245, 100},
    // Brows 17-26.
    {95, 85}, {107, 78}, {120, 75}, {133, 78}, {145, 83},
    {175, 83}, {187, 78}, {200, 75}, {213, 78}, {225, 85},
    // Nose bridge 27-30 and nostrils 31-35.
    {160, 100}, {160, 120}, {160, 140}, {160, 155},
    {140, 165}, {150, 168}, {160, 170}, {170, 168}, {180, 165},
    // Right eye 36-41, left eye 42-47.
    {100, 100}, {112, 95}, {128, 95}, {140, 100}, {128, 105}, {112, 105},
    {180, 100}, {192, 95}, {208, 95}, {220, 100}, {208, 105}, {192, 105},
    // Outer mouth 48-59.
    {130, 200}, {140, 192}, {151, 188}, {160, 187}, {169, 188}, {180, 192},
    {190, 200}, {180, 210}, {169, 214}, {160, 215}, {151, 214}, {140, 210},
    // Inner mouth 60-67.
    {138, 200}, {150, 196}, {160, 195}, {170, 196}, {182, 200}, {170, 205},
    {160, 206}, {150, 205},
    // Shoulders 68-69.
    {60, 300}, {260, 300},
};

void rotate_range(LandmarkSet& ls, int first, int last, const Point2& center, double deg) {
    for (int i = first; i <= last; ++i) {
        ls.points[static_cast<std::size_t>(i)] =
            rotate_about(ls.points[static_cast<std::size_t>(i)], center, deg);
    }
}

void translate_range(LandmarkSet& ls, int first, int last, double dx, double dy) {
    for (int i = first; i <= last; ++i) {
        ls.points[static_cast<std::size_t>(i)].x += dx;
        ls.points[static_cast<std::size_t>(i)].y += dy;
    }
}

void similarity_transform(LandmarkSet& ls, const Point2& center, double deg, double scale,
                          double dx, double dy) {
    for (Point2& p : ls.points) {
        Point2 r = rotate_about(p, center, deg);
        p = {center.x + scale * (r.x - center.x) + dx, center.y + scale * (r.y - center.y) + dy};
    }
}

std::string pair_id(int index, int total) {
    int width = 3;
    for (int limit = 1000; total > limit; limit *= 10) {
        ++width;
    }
    std::string digits = std::to_string(index);
    return "synth_" + std::string(static_cast<std::size_t>(width) - digits.size(), '0') + digits;
}

}  // namespace

LandmarkSet canonical_face(std::string image_id) {
    LandmarkSet ls;
    ls.image_id = std::move(image_id);
    ls.points.reserve(lm::kPointCount);
    for (const auto& p : kFacePoints) {
        ls.points.push_back({p[0], p[1]});
    }
    return ls;
}

SynthDataset generate_dataset(const SynthParams& params) {
    if (params.n < 1) {
        throw Error("synth: n must be at least 1");
    }
    if (params.noise_sigma_pct < 0.0) {
        throw Error("synth: sigma must be non-negative");
    }
    if (params.outlier_fraction < 0.0 || params.outlier_fraction > 1.0) {
        throw Error("synth: outlier fraction must lie in [0, 1]");
    }
    if (params.outlier_shift_px < 0.0) {
        throw Error("synth: outlier shift must be non-negative");
    }

    Rng rng(params.seed);
    const std::size_t n = static_cast<std::size_t>(params.n);

    // Pick exactly round(fraction * n) outlier images up front.
    std::vector<bool> is_outlier(n, false);
    const std::size_t n_outliers = static_cast<std::size_t>(
        std::llround(params.outlier_fraction * static_cast<double>(n)));
    {
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        for (std::size_t i = 0; i < n_outliers; ++i) {
            const std::size_t j = i + rng.index(n - i);
            std::swap(order[i], order[j]);
            is_outlier[order[i]] = true;
        }
    }

    SynthDataset dataset;
    dataset.pairs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string id = pair_id(static_cast<int>(i), params.n);

        LandmarkSet gt = canonical_face(id);
        // Inner-canthal tilt (gives osa its variance): raise one inner
        // canthus and lower the other.
        const double canthal = rng.uniform(-params.max_canthal_tilt_px, params.max_canthal_tilt_px);
        gt.points[lm::kInnerCanthusR].y += canthal;
        gt.points[lm::kInnerCanthusL].y -= canthal;
        // Mouth-corner asymmetry (fa, rfs).
        const double mouth = rng.uniform(-params.max_mouth_shift_px, params.max_mouth_shift_px);
        gt.points[lm::kMouthCornerL].y += mouth;
        // Head rotation about the outer-canthal midpoint (hhd, ga).
        const Point2 head_center =
            midpoint(gt.points[lm::kOuterCanthusR], gt.points[lm::kOuterCanthusL]);
        const double head_rot =
            rng.uniform(-params.max_head_rotation_deg, params.max_head_rotation_deg);
        rotate_range(gt, 0, lm::kFacePointCount - 1, head_center, head_rot);
        // Lateral head offset along the (horizontal) shoulder line (td).
        const double offset =
            rng.uniform(-params.max_lateral_offset_px, params.max_lateral_offset_px);
        translate_range(gt, 0, lm::kFacePointCount - 1, offset, 0.0);
        // Shoulder tilt about the shoulder midpoint.
        const Point2 shoulder_mid = midpoint(gt.points[lm::kShoulderR], gt.points[lm::kShoulderL]);
        const double shoulder_rot =
            rng.uniform(-params.max_shoulder_tilt_deg, params.max_shoulder_tilt_deg);
        rotate_range(gt, lm::kShoulderR, lm::kShoulderL, shoulder_mid, shoulder_rot);
        // Random similarity transform of the whole scene; measures are
        // invariant under it, the files just stop looking alike.
        similarity_transform(gt, Point2{160.0, 180.0}, rng.uniform(-10.0, 10.0),
                             rng.uniform(0.8, 1.5), rng.uniform(0.0, 200.0),
                             rng.uniform(0.0, 200.0));

        LandmarkSet pred = gt;
        const double sigma_px =
            params.noise_sigma_pct / 100.0 *
            dist(gt.points[lm::kOuterCanthusR], gt.points[lm::kOuterCanthusL]);
        if (sigma_px > 0.0) {
            for (Point2& p : pred.points) {
                p.x += rng.normal(sigma_px);
                p.y += rng.normal(sigma_px);
            }
        }
        if (is_outlier[i]) {
            // A failed estimate: every predicted landmark lands far away.
            for (Point2& p : pred.points) {
                const double direction = rng.uniform(0.0, 2.0 * std::numbers::pi);
                const double magnitude = params.outlier_shift_px * rng.uniform(0.5, 1.5);
                p.x += magnitude * std::cos(direction);
                p.y += magnitude * std::sin(direction);
            }
        }

        dataset.manifest.entries.push_back({id, id + "_gt.pts70", id + "_pred.pts70"});
        dataset.pairs.push_back({id, std::move(gt), std::move(pred)});
    }
    return dataset;
}

void write_dataset(const SynthDataset& dataset, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < dataset.pairs.size(); ++i) {
        const LandmarkPair& pair = dataset.pairs[i];
        const ManifestEntry& entry = dataset.manifest.entries[i];
        write_pts70_file(out_dir / entry.gt_path, pair.gt);
        write_pts70_file(out_dir / entry.pred_path, pair.pred);
    }
    const std::string manifest_text = serialize_manifest(dataset.manifest);
    const std::filesystem::path manifest_path = out_dir / "manifest.csv";
    std::ofstream out(manifest_path, std::ios::binary);
    if (!out) {
        throw Error("cannot open " + manifest_path.string() + " for writing");
    }
    out.write(manifest_text.data(), static_cast<std::streamsize>(manifest_text.size()));
    if (!out) {
        throw Error("write failed on " + manifest_path.string());
    }
}

}  // namespace posym
