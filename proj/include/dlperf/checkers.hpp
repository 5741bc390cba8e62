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

#ifndef DLPERF_CHECKERS_HPP_
#define DLPERF_CHECKERS_HPP_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dlperf/catalog.hpp"
#include "dlperf/resolution.hpp"
#include "dlperf/traversal.hpp"

namespace dlperf {

enum class Rule { RNC001, MOB001, DPM001 };

struct RuleId {
  Rule rule;
  std::string_view code;
  std::string_view taxonomy_tag;
};

const RuleId& rule_info(Rule rule);
const std::vector<RuleId>& all_rules();
std::optional<Rule> parse_rule_code(std::string_view code);
std::set<Rule> every_rule();

struct LoopAnalysis {
  LoopSite loop;
  std::set<std::string> changed;
  std::set<std::string> defined_outside_reassigned;
  std::set<std::string> control_vars;
};

/// Changed variables of `loop`: its targets, names of `enclosing_defs`
/// rebound in the body, and everything assigned from those, to a fixpoint.
LoopAnalysis changed_vars(const LoopSite& loop, const std::set<std::string>& enclosing_defs);

struct RawFinding {
  Rule rule = Rule::RNC001;
  std::string path;
  Span span;
  /// Qualified API name (RNC001) or the transformer method (MOB001, DPM001).
  std::string subject;

  // Detail fields for message templating.
  std::optional<Span> loop_span;
  /// File holding the loop; differs from `path` for calls found in a callee
  /// defined elsewhere.
  std::string loop_path;
  /// Inter-procedural depth at which the call was found (0 = in the loop).
  int depth = 0;
  /// Project functions entered from the loop, outermost first.
  std::vector<std::string> via;
  /// MOB001: the `batch` call that follows.
  std::optional<Span> related_span;
  std::string related_method;
  std::string parallel_keyword;
};

/// Span reported for a call: from the final callee identifier to the end of
/// the call (`ds.map(f)` starts at `map`).
Span finding_span(const SourceUnit& unit, const CallSite& call);

std::vector<RawFinding> check_repeated_node_creation(const ModuleContext& module, const FunctionTable& functions,
                                                     const ApiCatalog& catalog, int depth_limit = 2);
std::vector<RawFinding> check_map_before_batch(const ModuleContext& module, const std::vector<DatasetState>& states);
std::vector<RawFinding> check_missing_parallelism(const ModuleContext& module,
                                                  const std::vector<DatasetState>& states,
                                                  const ApiCatalog& catalog);

/// Every enabled rule over one module, unsorted.
std::vector<RawFinding> check_module(const ModuleContext& module, const FunctionTable& functions,
                                     const ApiCatalog& catalog, const std::set<Rule>& enabled, int depth_limit);

/// Deduplicates by (rule, path, span, subject) and sorts by path, line,
/// column and rule code.
void normalize_findings(std::vector<RawFinding>& findings);

std::vector<RawFinding> run_rules(const std::vector<const ModuleContext*>& modules, const FunctionTable& functions,
                                  const ApiCatalog& catalog, const std::set<Rule>& enabled, int depth_limit = 2);

}  // namespace dlperf

#endif  // DLPERF_CHECKERS_HPP_
