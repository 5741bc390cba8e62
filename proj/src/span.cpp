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

#include "dlperf/span.hpp"

#include <algorithm>

namespace dlperf {

LineIndex::LineIndex(std::string_view text) : size_(text.size()) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') line_starts_.push_back(i + 1);
  }
}

Position LineIndex::position(std::size_t offset) const {
  offset = std::min(offset, size_);
  auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
  auto line = static_cast<int>(it - line_starts_.begin());
  return {line, static_cast<int>(offset - line_starts_[static_cast<std::size_t>(line - 1)])};
}

std::size_t LineIndex::line_start(int line) const {
  if (line < 1) return 0;
  auto idx = static_cast<std::size_t>(line - 1);
  if (idx >= line_starts_.size()) return size_;
  return line_starts_[idx];
}

std::size_t LineIndex::offset(Position pos) const {
  return std::min(line_start(pos.line) + static_cast<std::size_t>(std::max(pos.col, 0)), size_);
}

Span LineIndex::span(ByteRange range) const {
  Position a = position(range.begin);
  Position b = position(std::max(range.begin, range.end));
  return {a.line, a.col, b.line, b.col};
}

}  // namespace dlperf
