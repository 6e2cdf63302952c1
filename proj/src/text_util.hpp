// Copyright 2026 The bmp Authors
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

// Line-oriented helpers shared by the edge-list and certificate readers.

#ifndef BMP_SRC_TEXT_UTIL_HPP_
#define BMP_SRC_TEXT_UTIL_HPP_

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bmp/error.hpp"

namespace bmp::internal {

struct Line {
  int number;  // 1-based
  std::vector<std::string_view> tokens;
};

// Splits into whitespace-separated tokens, dropping blank and '#' lines.
inline std::vector<Line> ContentLines(std::string_view text) {
  constexpr std::string_view kSpace = " \t\r\f\v";
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++number;
    std::size_t eol = text.find('\n', start);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view raw = text.substr(start, eol - start);
    start = eol + 1;

    Line line{number, {}};
    std::size_t pos = raw.find_first_not_of(kSpace);
    while (pos != std::string_view::npos) {
      const std::size_t end = raw.find_first_of(kSpace, pos);
      line.tokens.push_back(raw.substr(pos, end - pos));
      pos = end == std::string_view::npos ? end
                                          : raw.find_first_not_of(kSpace, end);
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

inline std::optional<long long> ParseInteger(std::string_view token) {
  long long value = 0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  if (begin != end && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || begin == end) return std::nullopt;
  return value;
}

[[noreturn]] inline void ThrowParse(int line, const std::string& what) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + what);
}

}  // namespace bmp::internal

#endif  // BMP_SRC_TEXT_UTIL_HPP_
