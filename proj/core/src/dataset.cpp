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

#include "posym/dataset.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "posym/error.hpp"

namespace posym {

namespace {

constexpr std::string_view kManifestHeader = "image_id,gt_path,pred_path";

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line_no = 0;  // 1-based number of the line most recently taken

    bool done() const { return pos >= text.size(); }

    // Next line with the trailing LF/CRLF stripped.
    std::string_view next_line() {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        pos = eol + 1;
        ++line_no;
        return line;
    }
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view token, int line_no) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line_no, "malformed number '" + std::string(token) + "'");
    }
    if (!std::isfinite(value)) {
        throw ParseError(line_no, "non-finite coordinate '" + std::string(token) + "'");
    }
    return value;
}

// "key: value" header line with tolerant spacing.
std::string_view header_value(std::string_view line, std::string_view key, int line_no) {
    const std::string_view trimmed = trim(line);
    if (!trimmed.starts_with(key)) {
        throw ParseError(line_no, "expected '" + std::string(key) + ": ...', found '" +
                                      std::string(trimmed) + "'");
    }
    std::string_view rest = trim(trimmed.substr(key.size()));
    if (rest.empty() || rest.front() != ':') {
        throw ParseError(line_no, "expected ':' after '" + std::string(key) + "'");
    }
    return trim(rest.substr(1));
}

void require_trailing_blank(Cursor& cursor) {
    while (!cursor.done()) {
        const std::string_view line = cursor.next_line();
        if (!trim(line).empty()) {
            throw ParseError(cursor.line_no,
                             "unexpected content after document end: '" + std::string(line) + "'");
        }
    }
}

std::string format_fixed6(double value) {
    std::array<char, 352> buf;
    const auto [ptr, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, 6);
    if (ec != std::errc{}) {
        throw Error("coordinate does not fit fixed-point representation");
    }
    return std::string(buf.data(), ptr);
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw Error("read failed on " + path.string());
    }
    return std::move(buffer).str();
}

}  // namespace

LandmarkSet parse_pts70(std::string_view text, std::string image_id) {
    Cursor cursor{text};

    if (cursor.done()) {
        throw ParseError(1, "empty document");
    }
    const std::string_view version_text =
        header_value(cursor.next_line(), "version", cursor.line_no);
    int version = 0;
    const auto [vptr, vec_] =
        std::from_chars(version_text.data(), version_text.data() + version_text.size(), version);
    if (vec_ != std::errc{} || vptr != version_text.data() + version_text.size()) {
        throw ParseError(cursor.line_no, "malformed version '" + std::string(version_text) + "'");
    }

    if (cursor.done()) {
        throw ParseError(cursor.line_no, "missing n_points line");
    }
    const std::string_view count_text =
        header_value(cursor.next_line(), "n_points", cursor.line_no);
    int n_points = 0;
    const auto [cptr, cec] =
        std::from_chars(count_text.data(), count_text.data() + count_text.size(), n_points);
    if (cec != std::errc{} || cptr != count_text.data() + count_text.size()) {
        throw ParseError(cursor.line_no, "malformed n_points '" + std::string(count_text) + "'");
    }
    if (n_points != landmark::kPointCount) {
        throw ParseError(cursor.line_no, "n_points is " + std::to_string(n_points) +
                                             ", expected " +
                                             std::to_string(landmark::kPointCount));
    }

    if (cursor.done() || trim(cursor.next_line()) != "{") {
        throw ParseError(cursor.line_no + (cursor.done() ? 1 : 0), "missing '{'");
    }

    LandmarkSet ls;
    ls.image_id = std::move(image_id);
    ls.points.reserve(landmark::kPointCount);
    for (int i = 0; i < landmark::kPointCount; ++i) {
        if (cursor.done()) {
            throw ParseError(cursor.line_no + 1, "file ends after " + std::to_string(i) +
                                                     " of " +
                                                     std::to_string(landmark::kPointCount) +
                                                     " points");
        }
        const std::string_view line = trim(cursor.next_line());
        const std::size_t split = line.find_first_of(" \t");
        if (split == std::string_view::npos) {
            throw ParseError(cursor.line_no,
                             "expected two coordinates, found '" + std::string(line) + "'");
        }
        const double x = parse_double(trim(line.substr(0, split)), cursor.line_no);
        const double y = parse_double(trim(line.substr(split)), cursor.line_no);
        ls.points.push_back({x, y});
    }

    if (cursor.done() || trim(cursor.next_line()) != "}") {
        throw ParseError(cursor.line_no + (cursor.done() ? 1 : 0), "missing '}'");
    }
    require_trailing_blank(cursor);
    return ls;
}

std::string serialize_pts70(const LandmarkSet& ls) {
    if (ls.points.size() != static_cast<std::size_t>(landmark::kPointCount)) {
        throw Error("serialize_pts70: set has " + std::to_string(ls.points.size()) +
                    " points, expected " + std::to_string(landmark::kPointCount));
    }
    std::string out;
    out.reserve(2048);
    out += "version: 1\n";
    out += "n_points: ";
    out += std::to_string(landmark::kPointCount);
    out += "\n{\n";
    for (const Point2& p : ls.points) {
        out += format_fixed6(p.x);
        out += ' ';
        out += format_fixed6(p.y);
        out += '\n';
    }
    out += "}\n";
    return out;
}

LandmarkSet read_pts70_file(const std::filesystem::path& path) {
    return parse_pts70(read_text_file(path), path.stem().string());
}

void write_pts70_file(const std::filesystem::path& path, const LandmarkSet& ls) {
    const std::string text = serialize_pts70(ls);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open " + path.string() + " for writing");
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
        throw Error("write failed on " + path.string());
    }
}

DatasetManifest parse_manifest(std::string_view text) {
    Cursor cursor{text};

    std::string_view header;
    while (!cursor.done()) {
        header = trim(cursor.next_line());
        if (!header.empty()) break;
    }
    if (header != kManifestHeader) {
        throw ParseError(std::max(cursor.line_no, 1),
                         "expected header '" + std::string(kManifestHeader) + "'");
    }

    DatasetManifest manifest;
    std::unordered_set<std::string_view> seen;
    while (!cursor.done()) {
        const std::string_view line = trim(cursor.next_line());
        if (line.empty()) continue;

        ManifestEntry entry;
        std::array<std::string_view, 3> fields;
        std::size_t field = 0;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = std::min(line.find(',', start), line.size());
            if (field >= fields.size()) {
                throw ParseError(cursor.line_no, "expected 3 columns");
            }
            fields[field++] = trim(line.substr(start, comma - start));
            if (comma == line.size()) break;
            start = comma + 1;
        }
        if (field != fields.size()) {
            throw ParseError(cursor.line_no, "expected 3 columns, found " + std::to_string(field));
        }
        for (const std::string_view f : fields) {
            if (f.empty()) {
                throw ParseError(cursor.line_no, "empty column");
            }
        }
        entry.image_id = std::string(fields[0]);
        entry.gt_path = std::string(fields[1]);
        entry.pred_path = std::string(fields[2]);
        if (!seen.insert(fields[0]).second) {
            throw ParseError(cursor.line_no, "duplicate image_id '" + entry.image_id + "'");
        }
        manifest.entries.push_back(std::move(entry));
    }
    return manifest;
}

std::string serialize_manifest(const DatasetManifest& manifest) {
    std::string out(kManifestHeader);
    out += '\n';
    for (const ManifestEntry& entry : manifest.entries) {
        out += entry.image_id;
        out += ',';
        out += entry.gt_path;
        out += ',';
        out += entry.pred_path;
        out += '\n';
    }
    return out;
}

DatasetManifest read_manifest_file(const std::filesystem::path& path) {
    return parse_manifest(read_text_file(path));
}

namespace {

LandmarkSet load_member(const std::filesystem::path& base_dir, const std::string& rel_path,
                        const std::string& image_id, const char* role) {
    LandmarkSet ls;
    try {
        ls = read_pts70_file(base_dir / rel_path);
    } catch (const Error& e) {
        throw LoadError(image_id, role, e.what());
    }
    ls.image_id = image_id;
    const ValidationReport report = validate(ls);
    if (!report.ok()) {
        std::string joined;
        for (const std::string& err : report.errors) {
            if (!joined.empty()) joined += "; ";
            joined += err;
        }
        throw LoadError(image_id, role, "validation failed: " + joined);
    }
    return ls;
}

}  // namespace

LoadedDataset load_dataset(const DatasetManifest& manifest,
                           const std::filesystem::path& base_dir, bool skip_bad) {
    LoadedDataset result;
    result.pairs.reserve(manifest.entries.size());
    for (const ManifestEntry& entry : manifest.entries) {
        try {
            LandmarkPair pair;
            pair.image_id = entry.image_id;
            pair.gt = load_member(base_dir, entry.gt_path, entry.image_id, "gt");
            pair.pred = load_member(base_dir, entry.pred_path, entry.image_id, "pred");
            result.pairs.push_back(std::move(pair));
        } catch (const LoadError& e) {
            if (!skip_bad) throw;
            result.skipped.push_back({entry.image_id, e.what()});
        }
    }
    return result;
}

}  // namespace posym
