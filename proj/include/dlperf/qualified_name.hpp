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

#ifndef DLPERF_QUALIFIED_NAME_HPP_
#define DLPERF_QUALIFIED_NAME_HPP_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dlperf {

/// Canonical dotted API identity such as `tensorflow.data.Dataset.map`.
/// Never empty; no segment is empty.
class QualifiedName {
 public:
  /// Parses dotted text. Returns nullopt for "", "a..b", ".a" and similar.
  static std::optional<QualifiedName> parse(std::string_view dotted);
  /// Throws std::invalid_argument on malformed input.
  static QualifiedName from(std::string_view dotted);

  const std::vector<std::string>& segments() const { return segments_; }
  std::size_t size() const { return segments_.size(); }
  const std::string& head() const { return segments_.front(); }
  const std::string& tail() const { return segments_.back(); }
  std::string str() const;

  QualifiedName child(std::string_view segment) const;
  QualifiedName joined(const std::vector<std::string>& more) const;
  bool starts_with(const QualifiedName& prefix) const;
  /// Replaces a leading `prefix` by `replacement`; caller checks starts_with.
  QualifiedName rebased(const QualifiedName& prefix, const QualifiedName& replacement) const;
  /// Leading `n` segments (n >= 1).
  QualifiedName prefix(std::size_t n) const;

  friend auto operator<=>(const QualifiedName&, const QualifiedName&) = default;
  friend bool operator==(const QualifiedName&, const QualifiedName&) = default;

 private:
  explicit QualifiedName(std::vector<std::string> segments) : segments_(std::move(segments)) {}
  std::vector<std::string> segments_;
};

bool is_identifier(std::string_view s);

}  // namespace dlperf

#endif  // DLPERF_QUALIFIED_NAME_HPP_
