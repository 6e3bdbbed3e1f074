// Copyright 2026 The tourneylab Authors
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

// TRN1 text format:
//
//   TRN1 <n>
//   <row 0: n characters '0'/'1'>
//   ...
//   <row n-1>
//
// A single trailing newline after the last row is allowed; anything else after
// it is rejected.

#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>

#include "tourneylab/error.hpp"
#include "tourneylab/tournament.hpp"

namespace tourneylab {

inline std::string to_trn1(const Tournament& t) {
  const std::size_t n = t.size();
  std::string out = "TRN1 " + std::to_string(n) + "\n";
  out.reserve(out.size() + n * (n + 1));
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) out.push_back(t.beats(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

inline Tournament parse_trn1(std::string_view text) {
  std::size_t pos = 0;
  std::size_t line_no = 0;
  auto next_line = [&](std::string_view& line) {
    if (pos >= text.size()) return false;
    const std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      line = text.substr(pos);
      pos = text.size();
    } else {
      line = text.substr(pos, end - pos);
      pos = end + 1;
    }
    ++line_no;
    return true;
  };

  std::string_view line;
  if (!next_line(line)) throw ParseError(1, "empty input");
  if (line.substr(0, 5) != "TRN1 ")
    throw ParseError(1, "expected header 'TRN1 <n>'");
  const std::string_view count = line.substr(5);
  std::size_t n = 0;
  const auto [end, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
  if (ec != std::errc() || end != count.data() + count.size() || count.empty())
    throw ParseError(1, "bad vertex count '" + std::string(count) + "'");
  if (n < 1) throw ParseError(1, "vertex count must be at least 1");
  if (n > kMaxVertices) throw ParseError(1, "vertex count exceeds 65536");

  TournamentBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!next_line(line))
      throw ParseError(line_no + 1, "missing row " + std::to_string(i));
    if (line.size() != n)
      throw ParseError(line_no, "row has " + std::to_string(line.size()) +
                                    " characters, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      const char c = line[j];
      if (c != '0' && c != '1')
        throw ParseError(line_no, std::string("unexpected character '") + c + "'");
      b.set_cell(static_cast<Vertex>(i), static_cast<Vertex>(j), c == '1');
    }
  }
  if (pos < text.size())
    throw ParseError(line_no + 1, "trailing data after last row");
  return b.build();
}

inline Tournament read_trn1_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_trn1(ss.str());
}

inline void write_text_file(const std::filesystem::path& path,
                            std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

inline void write_trn1_file(const std::filesystem::path& path,
                            const Tournament& t) {
  write_text_file(path, to_trn1(t));
}

}  // namespace tourneylab
