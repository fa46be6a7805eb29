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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "posym/landmarks.hpp"

namespace posym {

// .pts70 landmark files keep the community .pts grammar with the point
// count raised to 70 (indices 68-69 are the shoulders):
//
//   version: 1
//   n_points: 70
//   {
//   <x> <y>          (70 lines, decimal point only)
//   }
//
// Coordinates are written with 6 decimal places, which makes serialization
// byte-deterministic and a parse/serialize round trip a fixpoint.

/// Parses a .pts70 document. The image id is taken from the caller (it is
/// not part of the grammar). Throws ParseError with a 1-based line number.
LandmarkSet parse_pts70(std::string_view text, std::string image_id);

/// Serializes exactly 70 points to the .pts70 grammar, LF line endings.
/// Throws Error if the set does not hold exactly 70 points.
std::string serialize_pts70(const LandmarkSet& ls);

/// Reads a .pts70 file; the image id is the file stem. Throws Error if the
/// file cannot be read, ParseError on malformed content.
LandmarkSet read_pts70_file(const std::filesystem::path& path);

void write_pts70_file(const std::filesystem::path& path, const LandmarkSet& ls);

/// One dataset record: an image id plus the ground-truth and prediction
/// file paths, relative to the manifest's directory unless overridden.
struct ManifestEntry {
    std::string image_id;
    std::string gt_path;
    std::string pred_path;

    friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

struct DatasetManifest {
    std::vector<ManifestEntry> entries;

    friend bool operator==(const DatasetManifest&, const DatasetManifest&) = default;
};

/// Parses a manifest: header `image_id,gt_path,pred_path`, one record per
/// line, blank lines skipped, LF or CRLF accepted. Duplicate image ids and
/// wrong column counts are ParseErrors naming the line.
DatasetManifest parse_manifest(std::string_view text);

/// Emits the manifest with LF line endings, byte-deterministic.
std::string serialize_manifest(const DatasetManifest& manifest);

DatasetManifest read_manifest_file(const std::filesystem::path& path);

/// A loaded ground-truth/prediction pair; both sets carry the entry's
/// image id.
struct LandmarkPair {
    std::string image_id;
    LandmarkSet gt;
    LandmarkSet pred;
};

struct SkippedPair {
    std::string image_id;
    std::string reason;
};

struct LoadedDataset {
    std::vector<LandmarkPair> pairs;   // in manifest order
    std::vector<SkippedPair> skipped;  // only populated when skip_bad is set
};

/// Loads and validates every pair under base_dir. A missing file, parse
/// failure, or validation error throws LoadError naming the image id and
/// role ("gt"/"pred"); with skip_bad the offending entries are collected
/// in `skipped` instead.
LoadedDataset load_dataset(const DatasetManifest& manifest,
                           const std::filesystem::path& base_dir, bool skip_bad = false);

}  // namespace posym
