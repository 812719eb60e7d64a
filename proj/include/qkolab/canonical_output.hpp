// Copyright 2026 The qkolab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QKOLAB_CANONICAL_OUTPUT_HPP_
#define QKOLAB_CANONICAL_OUTPUT_HPP_

#include <string>
#include <vector>

#include "json.hpp"

namespace qkolab::io {

/// Sorted keys, two-space indentation, floats as %.12g, non-finite floats
/// as null, trailing newline.
std::string canonical_json(const nlohmann::json& value);

/// %.12g.
std::string format_double(double v);

/// RFC 4180: CRLF line ends, fields quoted when they contain a comma, quote,
/// CR or LF, quotes doubled.
std::string csv_field(const std::string& field);
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows);

/// Writes to a temporary file beside `path`, then renames it into place.
/// Throws std::runtime_error naming the path on failure.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace qkolab::io

#endif  // QKOLAB_CANONICAL_OUTPUT_HPP_
