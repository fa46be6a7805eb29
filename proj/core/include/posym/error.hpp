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

#include <stdexcept>
#include <string>

namespace posym {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Text-level failure while parsing a landmark file, manifest, or config.
/// Carries the 1-based line number of the offending line.
class ParseError : public Error {
  public:
    ParseError(int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const noexcept { return line_; }

  private:
    int line_;
};

/// A geometric primitive was handed a zero-length direction.
class DegenerateDirectionError : public Error {
  public:
    using Error::Error;
};

/// A symmetry measure could not be computed because one of its defining
/// lines collapsed (coincident landmarks). Names the measure and the
/// offending geometric element.
class DegenerateMeasureError : public Error {
  public:
    DegenerateMeasureError(std::string measure, std::string element)
        : Error(measure + ": degenerate " + element),
          measure_(std::move(measure)),
          element_(std::move(element)) {}

    const std::string& measure() const noexcept { return measure_; }
    const std::string& element() const noexcept { return element_; }

  private:
    std::string measure_;
    std::string element_;
};

/// A metric was asked for fewer samples than it is defined on.
class InsufficientSampleError : public Error {
  public:
    using Error::Error;
};

/// A dataset entry failed to load. Carries the image id and whether the
/// ground-truth or the prediction file was at fault.
class LoadError : public Error {
  public:
    LoadError(std::string image_id, std::string role, const std::string& message)
        : Error(image_id + " (" + role + "): " + message),
          image_id_(std::move(image_id)),
          role_(std::move(role)) {}

    const std::string& image_id() const noexcept { return image_id_; }
    const std::string& role() const noexcept { return role_; }

  private:
    std::string image_id_;
    std::string role_;
};

}  // namespace posym
