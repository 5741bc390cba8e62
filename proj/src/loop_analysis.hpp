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

#ifndef DLPERF_SRC_LOOP_ANALYSIS_HPP_
#define DLPERF_SRC_LOOP_ANALYSIS_HPP_

#include <set>
#include <string>
#include <vector>

#include "dlperf/checkers.hpp"

namespace dlperf::detail {

/// `targets` take a value computed from `reads`.
struct AssignRecord {
  std::set<std::string> targets;
  std::set<std::string> reads;
  /// Augmented or self-referencing: differs between iterations regardless
  /// of its inputs.
  bool loop_carried = false;
};

struct BodyFacts {
  std::vector<AssignRecord> records;
  /// Names rebound anywhere in the body (stores, mutator calls, targets).
  std::set<std::string> assigned;
  /// Nested loop, comprehension and `except ... as` targets.
  std::set<std::string> seeds;
};

/// Facts for a statement list; nested def/class/lambda bodies are skipped.
BodyFacts collect_body_facts(const std::vector<Node*>& body);

/// Least fixpoint of `changed` under the records of `facts`.
std::set<std::string> close_changed(const BodyFacts& facts, std::set<std::string> changed);

}  // namespace dlperf::detail

#endif  // DLPERF_SRC_LOOP_ANALYSIS_HPP_
