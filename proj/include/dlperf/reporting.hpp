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

#ifndef DLPERF_REPORTING_HPP_
#define DLPERF_REPORTING_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dlperf/checkers.hpp"
#include "dlperf/source.hpp"

namespace dlperf {

enum class Severity { Warning, Error };

std::string_view to_string(Severity s);
std::optional<Severity> parse_severity(std::string_view s);

struct Diagnostic {
  std::string code;
  Severity severity = Severity::Warning;
  std::string path;
  Span span;
  std::string subject;
  std::string message;
  std::string fix_hint;
  std::string taxonomy_tag;
  bool suppressed = false;
};

/// A tool-level message that is not a finding: unparsable files, malformed
/// suppression markers, unreadable paths.
struct Notice {
  std::string path;
  int line = 0;
  int col = 0;
  std::string message;
};

struct RunSummary {
  int files_scanned = 0;
  int files_with_notices = 0;
  /// Emitted diagnostics per rule code; every known code is present.
  std::map<std::string, int> findings_per_rule;
  /// Findings silenced by markers (emitted only with show_suppressed).
  int suppressed = 0;
  /// Findings not silenced by a marker; drives the exit code.
  int unsuppressed = 0;
  bool tool_error = false;
  int exit_code = 0;
};

/// One `# dlperf: ignore[...]` marker. Empty `codes` silences every rule.
struct SuppressionMarker {
  int line = 0;
  std::set<std::string> codes;
};

/// Markers of one unit; malformed markers become notices and are dropped.
std::vector<SuppressionMarker> parse_suppressions(const SourceUnit& unit, std::vector<Notice>& notices);

std::string render_message(const RawFinding& f);
std::string render_fix_hint(const RawFinding& f);

/// Turns findings into diagnostics, marking those covered by a marker on
/// their line or the line above. `units` maps display paths to units.
std::vector<Diagnostic> apply_suppressions(const std::vector<RawFinding>& findings,
                                           const std::map<std::string, const SourceUnit*>& units,
                                           std::vector<Notice>& notices,
                                           const std::map<std::string, Severity>& severities = {});

/// Keeps suppressed diagnostics only when `show_suppressed`, and fills
/// the summary counts (exit code included).
RunSummary summarize(std::vector<Diagnostic>& diags, int files_scanned, const std::vector<Notice>& notices,
                     bool show_suppressed, bool tool_error = false);

std::string render_text(const std::vector<Diagnostic>& diags, const RunSummary& summary,
                        const std::vector<Notice>& notices = {});
std::string render_json(const std::vector<Diagnostic>& diags, const RunSummary& summary,
                        const std::vector<Notice>& notices = {});

/// 0 clean, 1 unsuppressed findings, 2 tool error.
int exit_code(const RunSummary& summary);

}  // namespace dlperf

#endif  // DLPERF_REPORTING_HPP_
