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

// Whole-run orchestration: configuration, file discovery, the analysis
// pipeline and the annotated-corpus harness.

#ifndef DLPERF_HARNESS_HPP_
#define DLPERF_HARNESS_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dlperf/checkers.hpp"
#include "dlperf/reporting.hpp"

namespace dlperf {

enum class OutputFormat { Text, Json };

struct Config {
  std::set<Rule> rules = every_rule();
  std::optional<std::filesystem::path> catalog;
  int depth_limit = 2;
  OutputFormat format = OutputFormat::Text;
  bool show_suppressed = false;
  std::vector<std::string> include;
  std::vector<std::string> exclude;
  /// Worker threads; 0 picks the hardware concurrency.
  int jobs = 1;
  std::map<std::string, Severity> severities;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Applies a JSON config document over `base`. Unknown keys and invalid
/// values throw ConfigError. Relative catalog paths resolve against
/// `base_dir`.
Config parse_config(std::string_view json_text, std::string_view source, const Config& base = {},
                    const std::filesystem::path& base_dir = {});
Config load_config(const std::filesystem::path& path, const Config& base = {});

/// Comma-separated rule codes; throws ConfigError on unknown codes.
std::set<Rule> parse_rule_list(std::string_view codes);

/// Glob over `/`-separated paths: `*` and `?` stay within a segment, `**`
/// spans segments (`**/` may match nothing).
bool glob_match(std::string_view pattern, std::string_view path);

struct SourceFile {
  std::filesystem::path path;
  /// Path relative to the root it was found under (module naming, globs).
  std::filesystem::path relative;
};

/// `.py` files under `roots`, filtered by include/exclude globs and sorted
/// by path. Directory symlink cycles are visited once. Missing roots add a
/// notice and set `missing_root`.
std::vector<SourceFile> discover_files(const std::vector<std::filesystem::path>& roots, const Config& config,
                                       std::vector<Notice>* notices = nullptr, bool* missing_root = nullptr);

struct CheckResult {
  std::vector<Diagnostic> diagnostics;
  RunSummary summary;
  std::vector<Notice> notices;
  /// Parsed units by display path (for expectation scanning).
  std::map<std::string, std::shared_ptr<const SourceUnit>> units;
};

/// discover -> parse -> resolve -> rules -> suppress -> summarize.
CheckResult run_check(const std::vector<std::filesystem::path>& roots, const Config& config);

std::string render(const CheckResult& result, OutputFormat format);

struct Expectation {
  std::string path;
  int line = 0;
  std::string code;
  friend auto operator<=>(const Expectation&, const Expectation&) = default;
};

/// `# expect: CODE[, CODE...]` annotations of one unit.
std::vector<Expectation> parse_expectations(const SourceUnit& unit, std::vector<Notice>* notices = nullptr);

struct CorpusRow {
  int detected = 0;
  int projects = 0;
  int expected = 0;
  int matched = 0;
  int missing = 0;
  int unexpected = 0;
};

struct CorpusReport {
  std::vector<Expectation> matched;
  std::vector<Expectation> missing;
  std::vector<Expectation> unexpected;
  /// Per rule code, plus "Total".
  std::map<std::string, CorpusRow> rows;
  /// Project (first directory under the corpus root) -> rule code -> count.
  std::map<std::string, std::map<std::string, int>> per_project;
  int files = 0;
  std::vector<Notice> notices;
  bool tool_error = false;
  int exit_code = 0;
};

CorpusReport run_corpus(const std::filesystem::path& root, const Config& config);
std::string render_corpus_text(const CorpusReport& report);
std::string render_corpus_json(const CorpusReport& report);

}  // namespace dlperf

#endif  // DLPERF_HARNESS_HPP_
