// Copyright 2026 The SRLScore Authors.
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

#ifndef SRLSCORE_CLI_H_
#define SRLSCORE_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace srlscore {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInput = 2,
  kExitRuntime = 3,
};

// Runs the command line front end. `args` excludes the program name. JSON
// results go to `out` (or to --out/--report files); diagnostics go to `err`.
// A one-line human summary is added to `err` when `interactive` is set.
int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err, bool interactive = false);

}  // namespace srlscore

#endif  // SRLSCORE_CLI_H_
