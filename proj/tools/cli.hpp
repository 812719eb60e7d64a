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

#ifndef QKOLAB_TOOLS_CLI_HPP_
#define QKOLAB_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace qkolab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitCap = 3;

/// Runs one command line (without the program name). Reports go to the
/// --out file when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses a flat key=value config file; '#' starts a comment line.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

}  // namespace qkolab::cli

#endif  // QKOLAB_TOOLS_CLI_HPP_
