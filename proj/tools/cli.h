// Copyright 2026 The hubcover Authors
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

#ifndef HUBCOVER_TOOLS_CLI_H_
#define HUBCOVER_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace hubcover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs one command; `args` excludes the program name. Returns the exit code:
// 0 on success, 1 on an infeasible instance or failed verification, 2 on
// usage or format errors.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace hubcover::cli

#endif  // HUBCOVER_TOOLS_CLI_H_
