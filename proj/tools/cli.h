// Copyright 2026 The Ricci Authors
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

#ifndef RICCI_TOOLS_CLI_H_
#define RICCI_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace ricci::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;

// Runs one `ricci` invocation. `args` excludes the program name. Results go
// to `out` unless a command writes to files; diagnostics go to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Path of the manifest written next to an output file.
std::string ManifestPath(const std::string& output);

}  // namespace ricci::cli

#endif  // RICCI_TOOLS_CLI_H_
