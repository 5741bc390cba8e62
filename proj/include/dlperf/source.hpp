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

#ifndef DLPERF_SOURCE_HPP_
#define DLPERF_SOURCE_HPP_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlperf/span.hpp"
#include "dlperf/syntax.hpp"

namespace dlperf {

/// A `#` comment. `text` starts at the `#`.
struct Comment {
  int line = 1;
  int col = 0;
  std::string text;
};

/// One parsed source file. Immutable after construction and safe to share
/// across threads through `std::shared_ptr<const SourceUnit>`.
class SourceUnit {
 public:
  SourceUnit(std::filesystem::path path, std::string text, SyntaxTree tree,
             LineIndex lines, std::vector<Comment> comments, std::string module_name);

  SourceUnit(const SourceUnit&) = delete;
  SourceUnit& operator=(const SourceUnit&) = delete;

  const std::filesystem::path& path() const { return path_; }
  /// Path with forward slashes, as used in reports.
  const std::string& display_path() const { return display_path_; }
  const std::string& text() const { return text_; }
  const Node& root() const { return *tree_.root(); }
  const LineIndex& lines() const { return lines_; }
  const std::vector<Comment>& comments() const { return comments_; }

  /// Dotted module name used to qualify project-local definitions.
  const std::string& module_name() const { return module_name_; }

  Span span(const Node& node) const { return lines_.span(node.range); }
  Span span(ByteRange range) const { return lines_.span(range); }
  std::string_view source(ByteRange range) const;

  /// Comments on a 1-based line, in column order.
  std::vector<const Comment*> comments_on(int line) const;

  std::size_t node_count() const { return tree_.size(); }

 private:
  std::filesystem::path path_;
  std::string display_path_;
  std::string text_;
  SyntaxTree tree_;
  LineIndex lines_;
  std::vector<Comment> comments_;
  std::string module_name_;
};

struct ParseError {
  Span span;
  std::string message;
};

/// Exactly one of `unit` / `error` is set.
struct ParseOutcome {
  std::shared_ptr<const SourceUnit> unit;
  std::optional<ParseError> error;

  bool ok() const { return unit != nullptr; }
};

/// Parses Python 3.8+ source. Never throws for malformed input; syntax
/// errors come back positioned in ParseOutcome::error. `module_name`
/// defaults to the file stem.
ParseOutcome parse_source(const std::filesystem::path& path, std::string text,
                          std::string module_name = {});

/// Module-name helper: `pkg/sub/mod.py` -> `pkg.sub.mod`, `pkg/__init__.py`
/// -> `pkg`.
std::string module_name_for(const std::filesystem::path& relative);

}  // namespace dlperf

#endif  // DLPERF_SOURCE_HPP_
