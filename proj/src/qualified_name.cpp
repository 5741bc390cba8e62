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

#include "dlperf/qualified_name.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace dlperf {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto c0 = static_cast<unsigned char>(s[0]);
  if (!(std::isalpha(c0) || c0 == '_' || c0 >= 0x80)) return false;
  for (char ch : s) {
    auto c = static_cast<unsigned char>(ch);
    if (!(std::isalnum(c) || c == '_' || c >= 0x80)) return false;
  }
  return true;
}

std::optional<QualifiedName> QualifiedName::parse(std::string_view dotted) {
  std::vector<std::string> segs;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = dotted.find('.', start);
    std::string_view seg = dotted.substr(start, dot == std::string_view::npos ? dotted.npos : dot - start);
    if (!is_identifier(seg)) return std::nullopt;
    segs.emplace_back(seg);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return QualifiedName(std::move(segs));
}

QualifiedName QualifiedName::from(std::string_view dotted) {
  auto q = parse(dotted);
  if (!q) throw std::invalid_argument("malformed qualified name: '" + std::string(dotted) + "'");
  return *q;
}

std::string QualifiedName::str() const {
  std::string out;
  for (const auto& s : segments_) {
    if (!out.empty()) out += '.';
    out += s;
  }
  return out;
}

QualifiedName QualifiedName::child(std::string_view segment) const {
  auto segs = segments_;
  segs.emplace_back(segment);
  return QualifiedName(std::move(segs));
}

QualifiedName QualifiedName::joined(const std::vector<std::string>& more) const {
  auto segs = segments_;
  segs.insert(segs.end(), more.begin(), more.end());
  return QualifiedName(std::move(segs));
}

bool QualifiedName::starts_with(const QualifiedName& prefix) const {
  if (prefix.size() > size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (segments_[i] != prefix.segments_[i]) return false;
  }
  return true;
}

QualifiedName QualifiedName::rebased(const QualifiedName& prefix, const QualifiedName& replacement) const {
  auto segs = replacement.segments_;
  segs.insert(segs.end(), segments_.begin() + static_cast<std::ptrdiff_t>(prefix.size()), segments_.end());
  return QualifiedName(std::move(segs));
}

QualifiedName QualifiedName::prefix(std::size_t n) const {
  n = std::max<std::size_t>(1, std::min(n, size()));
  return QualifiedName(std::vector<std::string>(segments_.begin(), segments_.begin() + static_cast<std::ptrdiff_t>(n)));
}

}  // namespace dlperf
