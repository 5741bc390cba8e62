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

// Helpers shared by the unit, property and acceptance binaries.

#ifndef DLPERF_TESTS_SUPPORT_HPP_
#define DLPERF_TESTS_SUPPORT_HPP_

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "dlperf/harness.hpp"
#include "dlperf/resolution.hpp"

namespace dlperf::testing {

std::filesystem::path source_dir();
std::filesystem::path fixture(const std::string& name);

/// Parses `text`; fails loudly (throws) on a syntax error.
std::shared_ptr<const SourceUnit> parse_text(const std::string& text, const std::string& path = "snippet.py");

/// Findings of all rules over in-memory sources (path -> text).
std::vector<RawFinding> analyze(const std::vector<std::pair<std::string, std::string>>& files,
                                const std::set<Rule>& rules = every_rule(), int depth = 2);

/// Findings of one fixture file through the full pipeline.
CheckResult check_paths(const std::vector<std::filesystem::path>& paths, const Config& config = {});

std::vector<int> lines_of(const std::vector<Diagnostic>& diags, const std::string& code);

struct PropertyResult {
  bool ok = true;
  std::string detail;
  int cases = 0;
};

/// Byte-identical JSON across repeated runs and worker counts.
PropertyResult check_determinism(const std::vector<std::filesystem::path>& roots);

/// Randomized loop bodies: `changed` equals an independently computed least
/// fixpoint, and grows monotonically when statements or outer definitions
/// are added.
PropertyResult check_fixpoint_monotonicity(int trials, unsigned seed);

/// For every loop under `root`: targets are control variables and control
/// variables (and reassigned outer names) are changed.
PropertyResult check_control_vars(const std::filesystem::path& root);

/// Random suppression markers against the grammar.
PropertyResult check_suppression(int trials, unsigned seed);

/// Analyzer RNC001 lines versus the frozen dynamic-oracle verdicts.
PropertyResult check_dynamic_oracle(const std::filesystem::path& snippets, const std::filesystem::path& expected);

}  // namespace dlperf::testing

#endif  // DLPERF_TESTS_SUPPORT_HPP_
