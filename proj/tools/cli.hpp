// Copyright 2026 The gapseq Authors
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

#ifndef GAPSEQ_TOOLS_CLI_HPP_
#define GAPSEQ_TOOLS_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gapseq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitCap = 2;
inline constexpr int kExitUsage = 64;

// Environment variable that lowers (never raises) every genus cap.
inline constexpr const char* kMaxGenusEnv = "GAPSEQ_MAX_GENUS";

// Runs the tool on `args` (without the program name). Data goes to `out`,
// diagnostics to `err`; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parses "1,3,5" (blanks around items allowed, empty string = no gaps).
std::optional<std::vector<int>> parse_gap_list(std::string_view text);

}  // namespace gapseq::cli

#endif  // GAPSEQ_TOOLS_CLI_HPP_
