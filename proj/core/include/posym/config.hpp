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
#include <string_view>

#include "posym/metrics.hpp"

namespace posym {

/// Tool configuration, read from an optional flat key-value file:
///
///   # comment
///   rho_bands = 0.2 very weak, 0.4 weak, 0.6 moderate, 0.8 strong, 1.0 very strong
///   ga_relative = true
///   display_precision = 2
///
/// Command-line flags override config values.
struct Config {
    RhoBands bands = RhoBands::default_bands();
    bool ga_relative = false;
    int display_precision = 2;
};

/// Parses config text. Unknown keys, bad values, and lines without '=' are
/// ParseErrors with the line number.
Config parse_config(std::string_view text);

Config load_config_file(const std::filesystem::path& path);

}  // namespace posym
