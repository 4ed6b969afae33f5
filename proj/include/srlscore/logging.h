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

#ifndef SRLSCORE_LOGGING_H_
#define SRLSCORE_LOGGING_H_

#include <memory>
#include <string>

#include <spdlog/logger.h>

namespace srlscore {

// Shared stderr logger. Level comes from SRLSCORE_LOG (trace, debug, info,
// warn, error, off); default is warn.
std::shared_ptr<spdlog::logger> Log();

void SetLogLevel(const std::string &level);

}  // namespace srlscore

#endif  // SRLSCORE_LOGGING_H_
