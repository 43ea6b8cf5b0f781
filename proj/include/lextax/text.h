// Copyright 2026 The Lextax Authors.
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

// String utilities shared by the parsers and report writers.

#ifndef LEXTAX_TEXT_H_
#define LEXTAX_TEXT_H_

#include <cstdint>
#include <functional>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace lextax {

// Lowercases ASCII letters and the uppercase letters of the Latin-1
// supplement (Á, É, Ñ, ...) encoded as UTF-8. Other bytes pass through.
std::string Lowercase(std::string_view text);

// Strips ASCII whitespace from both ends.
std::string_view Trim(std::string_view text);

// Splits a definition into word forms: whitespace-separated chunks with
// leading and trailing punctuation removed, lowercased. Chunks that are pure
// punctuation are dropped. Accented letters are kept as they are.
std::vector<std::string> Tokenize(std::string_view text);

// Splits on a single delimiter character, keeping empty fields.
std::vector<std::string> Split(std::string_view text, char delimiter);

std::string Join(const std::vector<std::string> &parts, std::string_view sep);

// Calls `fn(line_number, fields)` for every tab-separated line of `in`.
// Blank lines and lines starting with '#' are skipped; a trailing '\r' is
// removed. Line numbers are 1-based.
void ForEachTsvLine(
    std::istream &in,
    const std::function<void(int, const std::vector<std::string> &)> &fn);

// 93394 -> "93,394".
std::string FormatCount(int64_t value);

// Formats 100 * part / whole with the given number of decimals and a '%'
// sign. A zero whole renders as zero percent.
std::string FormatPercent(double part, double whole, int decimals);

// Shortest decimal representation that parses back to the same double.
std::string FormatDouble(double value);

}  // namespace lextax

#endif  // LEXTAX_TEXT_H_
