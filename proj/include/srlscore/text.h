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

#ifndef SRLSCORE_TEXT_H_
#define SRLSCORE_TEXT_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace srlscore {

// ASCII lowercase, internal whitespace runs collapsed to one space, ends
// trimmed. Non-ASCII bytes pass through untouched.
std::string NormalizeText(std::string_view text);

// Normalized join of a token range.
std::string NormalizeTokens(std::span<const std::string> tokens);

// Splits on ASCII whitespace, dropping empty pieces.
std::vector<std::string_view> SplitWhitespace(std::string_view text);

}  // namespace srlscore

#endif  // SRLSCORE_TEXT_H_
