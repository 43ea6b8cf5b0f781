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

#include "lextax/text.h"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace lextax {

namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsAsciiPunct(unsigned char c) {
  return (c >= 0x21 && c <= 0x2f) || (c >= 0x3a && c <= 0x40) ||
         (c >= 0x5b && c <= 0x60) || (c >= 0x7b && c <= 0x7e);
}

// Multi-byte punctuation that shows up around Spanish words.
constexpr std::array<std::string_view, 11> kUtf8Punct = {
    "\xc2\xbf",          // ¿
    "\xc2\xa1",          // ¡
    "\xc2\xab",          // «
    "\xc2\xbb",          // »
    "\xe2\x80\x9c",      // “
    "\xe2\x80\x9d",      // ”
    "\xe2\x80\x98",      // ‘
    "\xe2\x80\x99",      // ’
    "\xe2\x80\x93",      // –
    "\xe2\x80\x94",      // —
    "\xe2\x80\xa6",      // …
};

// Length of the punctuation mark at the front of `s`, or 0.
size_t PunctPrefix(std::string_view s) {
  if (s.empty()) return 0;
  if (IsAsciiPunct(static_cast<unsigned char>(s[0]))) return 1;
  for (std::string_view p : kUtf8Punct) {
    if (s.substr(0, p.size()) == p) return p.size();
  }
  return 0;
}

// Length of the punctuation mark at the back of `s`, or 0.
size_t PunctSuffix(std::string_view s) {
  if (s.empty()) return 0;
  if (IsAsciiPunct(static_cast<unsigned char>(s.back()))) return 1;
  for (std::string_view p : kUtf8Punct) {
    if (s.size() >= p.size() && s.substr(s.size() - p.size()) == p) {
      return p.size();
    }
  }
  return 0;
}

}  // namespace

std::string Lowercase(std::string_view text) {
  std::string out(text);
  for (size_t i = 0; i < out.size(); ++i) {
    unsigned char c = out[i];
    if (c >= 'A' && c <= 'Z') {
      out[i] = static_cast<char>(c + 32);
    } else if (c == 0xc3 && i + 1 < out.size()) {
      // U+00C0..U+00DE map to U+00E0..U+00FE, except U+00D7 (×).
      unsigned char next = out[i + 1];
      if (next >= 0x80 && next <= 0x9e && next != 0x97) {
        out[i + 1] = static_cast<char>(next + 0x20);
      }
      ++i;
    }
  }
  return out;
}

std::string_view Trim(std::string_view text) {
  size_t begin = 0;
  size_t end = text.size();
  while (begin < end && IsSpace(text[begin])) ++begin;
  while (end > begin && IsSpace(text[end - 1])) --end;
  return text.substr(begin, end - begin);
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && IsSpace(text[pos])) ++pos;
    size_t start = pos;
    while (pos < text.size() && !IsSpace(text[pos])) ++pos;
    std::string_view chunk = text.substr(start, pos - start);
    while (size_t n = PunctPrefix(chunk)) chunk.remove_prefix(n);
    while (size_t n = PunctSuffix(chunk)) chunk.remove_suffix(n);
    if (!chunk.empty()) tokens.push_back(Lowercase(chunk));
  }
  return tokens;
}

std::vector<std::string> Split(std::string_view text, char delimiter) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t end = text.find(delimiter, start);
    if (end == std::string_view::npos) {
      parts.emplace_back(text.substr(start));
      break;
    }
    parts.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

std::string Join(const std::vector<std::string> &parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

void ForEachTsvLine(
    std::istream &in,
    const std::function<void(int, const std::vector<std::string> &)> &fn) {
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line[0] == '#') continue;
    fn(line_number, Split(line, '\t'));
  }
}

std::string FormatCount(int64_t value) {
  std::string digits = std::to_string(value < 0 ? -value : value);
  std::string out;
  int count = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (count > 0 && count % 3 == 0) out.push_back(',');
    out.push_back(*it);
    ++count;
  }
  if (value < 0) out.push_back('-');
  return std::string(out.rbegin(), out.rend());
}

std::string FormatPercent(double part, double whole, int decimals) {
  double pct = whole == 0 ? 0.0 : 100.0 * part / whole;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f%%", decimals, pct);
  return buf;
}

std::string FormatDouble(double value) {
  char buf[64];
  auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

}  // namespace lextax
