// Copyright 2026 The dlperf Authors
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

#ifndef DLPERF_SPAN_HPP_
#define DLPERF_SPAN_HPP_

#include <compare>
#include <cstddef>
#include <string_view>
#include <vector>

namespace dlperf {

/// Half-open byte range [begin, end) into a source buffer.
struct ByteRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool contains(const ByteRange& other) const {
    return begin <= other.begin && other.end <= end;
  }
  friend bool operator==(const ByteRange&, const ByteRange&) = default;
};

/// A line/column position. Lines are 1-based, columns are 0-based byte
/// offsets within the line.
struct Position {
  int line = 1;
  int col = 0;

  friend auto operator<=>(const Position&, const Position&) = default;
};

struct Span {
  int start_line = 1;
  int start_col = 0;
  int end_line = 1;
  int end_col = 0;

  Position start() const { return {start_line, start_col}; }
  Position end() const { return {end_line, end_col}; }

  friend auto operator<=>(const Span&, const Span&) = default;
};

/// Maps byte offsets to line/column positions and back.
class LineIndex {
 public:
  LineIndex() = default;
  explicit LineIndex(std::string_view text);

  Position position(std::size_t offset) const;
  std::size_t offset(Position pos) const;
  Span span(ByteRange range) const;

  std::size_t line_count() const { return line_starts_.size(); }
  std::size_t line_start(int line) const;

 private:
  std::vector<std::size_t> line_starts_{0};
  std::size_t size_ = 0;
};

}  // namespace dlperf

#endif  // DLPERF_SPAN_HPP_
