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

#ifndef DLPERF_TRAVERSAL_HPP_
#define DLPERF_TRAVERSAL_HPP_

#include <set>
#include <string>
#include <vector>

#include "dlperf/source.hpp"

namespace dlperf {

struct CallSite {
  const Node* call = nullptr;
  const Node* callee = nullptr;
  std::vector<const Node*> positional;
  std::vector<const Node*> keywords;
  Span span;

  /// Final attribute name for `x.m(...)`, the name for `f(...)`, else "".
  std::string method_name() const;
  bool has_keyword(std::string_view name) const;
  /// True if the call spreads `*args` or `**kwargs`.
  bool has_star_args() const;
  bool has_double_star_kwargs() const;
};

CallSite make_call_site(const SourceUnit& unit, const Node& call);

/// Every call under `scope` (the whole module when null), children before
/// parents and siblings in lexical order, so `f(g(x))` yields g then f.
/// With `enter_nested_scopes` false the walk does not descend into nested
/// def / class / lambda bodies below `scope`.
std::vector<CallSite> iter_calls(const SourceUnit& unit, const Node* scope = nullptr,
                                 bool enter_nested_scopes = true);

/// Same walk over a statement list.
std::vector<CallSite> iter_calls(const SourceUnit& unit, const std::vector<Node*>& stmts,
                                 bool enter_nested_scopes);

enum class LoopKind { For, While };

struct LoopSite {
  LoopKind kind = LoopKind::For;
  const Node* node = nullptr;
  /// Names bound by a `for` target (tuple-unpacked names included), sorted.
  std::set<std::string> targets;
  const std::vector<Node*>* body = nullptr;
  Span span;
};

/// All for/while loops in the unit, outer loops before the loops they
/// contain.
std::vector<LoopSite> iter_loops(const SourceUnit& unit);

LoopSite make_loop_site(const SourceUnit& unit, const Node& loop);

/// Names loaded by an expression. Names bound inside a nested comprehension
/// or lambda are excluded from that construct's reads.
std::set<std::string> names_read(const Node& expr);
void collect_names_read(const Node& expr, std::set<std::string>& out);

/// Plain names bound by an assignment target (`a`, `a, (b, *c)`).
std::set<std::string> bound_names(const Node& target);

/// Base names mutated through attribute or subscript stores in a target
/// (`x.y = ...`, `x[i] = ...` yield x).
std::set<std::string> mutated_bases(const Node& target);

}  // namespace dlperf

#endif  // DLPERF_TRAVERSAL_HPP_
