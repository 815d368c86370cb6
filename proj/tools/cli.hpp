// Copyright 2026 The quasibell Authors
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

#ifndef QUASIBELL_TOOLS_CLI_HPP_
#define QUASIBELL_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace quasibell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kToleranceEnv = "QUASIBELL_TOLERANCE";

enum class OutputFormat { kJson, kCsv, kPrettyTable };

struct RunConfig {
  std::string command;
  double tolerance = 1e-9;
  std::optional<std::uint64_t> seed;
  OutputFormat output_format = OutputFormat::kJson;
  std::vector<std::string> inputs;
  std::optional<std::string> output;
};

// Runs one invocation. `args` excludes the program name. Reports go to
// `out` (or --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quasibell::cli

#endif  // QUASIBELL_TOOLS_CLI_HPP_
