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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "posym/dataset.hpp"
#include "posym/landmarks.hpp"

namespace posym {

/// A frontal, mirror-symmetric 70-point fixture face. The key landmarks sit
/// at P36=(100,100), P39=(140,100), P42=(180,100), P45=(220,100),
/// P48=(130,200), P54=(190,200), P68=(60,300), P69=(260,300); its measures
/// are fa=0, osa=0, rfs=1, ga=+90, hhd=0, td=0.
LandmarkSet canonical_face(std::string image_id = "canonical");

/// Knobs for the synthetic fixture generator. Ground truth is drawn from
/// the canonical face by randomizing head rotation, lateral head offset,
/// mouth-corner asymmetry, inner-canthal tilt, and shoulder tilt, then
/// applying a random similarity transform. Predictions add Gaussian
/// landmark noise (sigma as a percentage of the outer-canthal distance)
/// and, optionally, gross displacement on an outlier fraction of images to
/// mimic failed landmark estimation.
struct SynthParams {
    int n = 36;
    double noise_sigma_pct = 0.0;
    double outlier_fraction = 0.0;
    double outlier_shift_px = 50.0;
    double max_head_rotation_deg = 15.0;
    double max_lateral_offset_px = 32.0;
    double max_mouth_shift_px = 16.0;
    double max_canthal_tilt_px = 6.0;
    double max_shoulder_tilt_deg = 5.0;
    std::uint64_t seed = 0;
};

struct SynthDataset {
    DatasetManifest manifest;
    std::vector<LandmarkPair> pairs;  // same order as the manifest
};

/// Deterministic for a given parameter set; every generated ground-truth
/// set validates cleanly. Throws Error on out-of-range parameters
/// (n < 1, sigma < 0, outlier fraction outside [0, 1]).
SynthDataset generate_dataset(const SynthParams& params);

/// Writes `<id>_gt.pts70` / `<id>_pred.pts70` plus `manifest.csv` under
/// out_dir (created if missing). Output is byte-deterministic.
void write_dataset(const SynthDataset& dataset, const std::filesystem::path& out_dir);

}  // namespace posym
