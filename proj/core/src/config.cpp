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

#include "posym/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "posym/error.hpp"

namespace posym {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool parse_bool(std::string_view value, int line_no) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ParseError(line_no, "expected a boolean, got '" + std::string(value) + "'");
}

}  // namespace

Config parse_config(std::string_view text) {
    Config config;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        const std::string_view line = trim(text.substr(pos, eol - pos));
        ++line_no;
        const bool at_end = eol == text.size();
        pos = eol + 1;

        if (!line.empty() && !line.starts_with('#')) {
            const std::size_t eq = line.find('=');
            if (eq == std::string_view::npos) {
                throw ParseError(line_no, "expected 'key = value'");
            }
            const std::string_view key = trim(line.substr(0, eq));
            const std::string_view value = trim(line.substr(eq + 1));
            if (key == "rho_bands") {
                try {
                    config.bands = RhoBands::parse(value);
                } catch (const Error& e) {
                    throw ParseError(line_no, e.what());
                }
            } else if (key == "ga_relative") {
                config.ga_relative = parse_bool(value, line_no);
            } else if (key == "display_precision") {
                int precision = 0;
                const auto [ptr, ec] =
                    std::from_chars(value.data(), value.data() + value.size(), precision);
                if (ec != std::errc{} || ptr != value.data() + value.size() || precision < 0 ||
                    precision > 17) {
                    throw ParseError(line_no, "display_precision must be an integer in [0, 17]");
                }
                config.display_precision = precision;
            } else {
                throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
            }
        }
        if (at_end) break;
    }
    return config;
}

Config load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open config " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace posym
