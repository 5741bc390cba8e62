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

#include "dlperf/traversal.hpp"

#include <algorithm>

namespace dlperf {

std::string CallSite::method_name() const {
  if (!callee) return {};
  if (callee->is(NodeKind::Attribute) || callee->is(NodeKind::Name)) return callee->name;
  return {};
}

bool CallSite::has_keyword(std::string_view name) const {
  return std::any_of(keywords.begin(), keywords.end(),
                     [&](const Node* k) { return k->name == name; });
}

bool CallSite::has_star_args() const {
  return std::any_of(positional.begin(), positional.end(),
                     [](const Node* a) { return a->is(NodeKind::Starred); });
}

bool CallSite::has_double_star_kwargs() const {
  return std::any_of(keywords.begin(), keywords.end(), [](const Node* k) { return k->name.empty(); });
}

CallSite make_call_site(const SourceUnit& unit, const Node& call) {
  CallSite site;
  site.call = &call;
  site.callee = call.func;
  site.positional.assign(call.args.begin(), call.args.end());
  site.keywords.assign(call.keywords.begin(), call.keywords.end());
  site.span = unit.span(call);
  return site;
}

namespace {

void walk_calls(const SourceUnit& unit, const Node& node, bool enter_nested, bool is_root,
                std::vector<CallSite>& out) {
  if (!is_root && !enter_nested && opens_scope(node) && !node.is(NodeKind::ListComp) &&
      !node.is(NodeKind::SetComp) && !node.is(NodeKind::DictComp) &&
      !node.is(NodeKind::GeneratorExp)) {
    // Decorators, defaults and class bases evaluate in the enclosing scope.
    for (const Node* d : node.decorators) walk_calls(unit, *d, enter_nested, false, out);
    if (node.is(NodeKind::ClassDef)) {
      for (const Node* b : node.args) walk_calls(unit, *b, enter_nested, false, out);
      for (const Node* k : node.keywords) walk_calls(unit, *k, enter_nested, false, out);
    } else {
      for (const Node* a : node.args) {
        if (a->value) walk_calls(unit, *a->value, enter_nested, false, out);
      }
    }
    return;
  }
  for (const Node* child : children(node)) walk_calls(unit, *child, enter_nested, false, out);
  if (node.is(NodeKind::Call)) out.push_back(make_call_site(unit, node));
}

void walk_loops(const SourceUnit& unit, const Node& node, std::vector<LoopSite>& out) {
  if (node.is(NodeKind::For) || node.is(NodeKind::While)) out.push_back(make_loop_site(unit, node));
  for (const Node* child : children(node)) walk_loops(unit, *child, out);
}

void bound_into(const Node& target, std::set<std::string>& out) {
  switch (target.kind) {
    case NodeKind::Name:
      out.insert(target.name);
      break;
    case NodeKind::Tuple:
    case NodeKind::List:
      for (const Node* e : target.args) bound_into(*e, out);
      break;
    case NodeKind::Starred:
      if (target.value) bound_into(*target.value, out);
      break;
    default:
      break;
  }
}

const Node* base_name(const Node* n) {
  while (n && (n->is(NodeKind::Attribute) || n->is(NodeKind::Subscript))) n = n->value;
  return n && n->is(NodeKind::Name) ? n : nullptr;
}

void mutated_into(const Node& target, std::set<std::string>& out) {
  switch (target.kind) {
    case NodeKind::Attribute:
    case NodeKind::Subscript:
      if (const Node* b = base_name(&target)) out.insert(b->name);
      break;
    case NodeKind::Tuple:
    case NodeKind::List:
      for (const Node* e : target.args) mutated_into(*e, out);
      break;
    case NodeKind::Starred:
      if (target.value) mutated_into(*target.value, out);
      break;
    default:
      break;
  }
}

void params_into(const Node& fn, std::set<std::string>& out) {
  for (const Node* a : fn.args) {
    if (a->is(NodeKind::Arg)) out.insert(a->name);
  }
}

}  // namespace

std::vector<CallSite> iter_calls(const SourceUnit& unit, const Node* scope, bool enter_nested_scopes) {
  std::vector<CallSite> out;
  walk_calls(unit, scope ? *scope : unit.root(), enter_nested_scopes, true, out);
  return out;
}

std::vector<CallSite> iter_calls(const SourceUnit& unit, const std::vector<Node*>& stmts,
                                 bool enter_nested_scopes) {
  std::vector<CallSite> out;
  for (const Node* s : stmts) walk_calls(unit, *s, enter_nested_scopes, false, out);
  return out;
}

LoopSite make_loop_site(const SourceUnit& unit, const Node& loop) {
  LoopSite site;
  site.node = &loop;
  site.kind = loop.is(NodeKind::For) ? LoopKind::For : LoopKind::While;
  if (loop.target) bound_into(*loop.target, site.targets);
  if (loop.target) mutated_into(*loop.target, site.targets);
  site.body = &loop.body;
  site.span = unit.span(loop);
  return site;
}

std::vector<LoopSite> iter_loops(const SourceUnit& unit) {
  std::vector<LoopSite> out;
  walk_loops(unit, unit.root(), out);
  return out;
}

void collect_names_read(const Node& expr, std::set<std::string>& out) {
  switch (expr.kind) {
    case NodeKind::Name:
      out.insert(expr.name);
      return;
    case NodeKind::Lambda: {
      std::set<std::string> inner;
      for (const Node* a : expr.args) {
        if (a->value) collect_names_read(*a->value, out);
      }
      if (expr.value) collect_names_read(*expr.value, inner);
      std::set<std::string> params;
      params_into(expr, params);
      for (const auto& n : inner) {
        if (!params.count(n)) out.insert(n);
      }
      return;
    }
    case NodeKind::ListComp:
    case NodeKind::SetComp:
    case NodeKind::DictComp:
    case NodeKind::GeneratorExp: {
      std::set<std::string> inner;
      std::set<std::string> bound;
      bool first = true;
      for (const Node* gen : expr.args) {
        // The first iterable is evaluated in the enclosing scope.
        if (gen->iter) collect_names_read(*gen->iter, first ? out : inner);
        first = false;
        if (gen->target) bound_into(*gen->target, bound);
        for (const Node* cond : gen->ifs) collect_names_read(*cond, inner);
      }
      if (expr.value) collect_names_read(*expr.value, inner);
      if (expr.other) collect_names_read(*expr.other, inner);
      for (const auto& n : inner) {
        if (!bound.count(n)) out.insert(n);
      }
      return;
    }
    default:
      break;
  }
  for (const Node* c : children(expr)) collect_names_read(*c, out);
}

std::set<std::string> names_read(const Node& expr) {
  std::set<std::string> out;
  collect_names_read(expr, out);
  return out;
}

std::set<std::string> bound_names(const Node& target) {
  std::set<std::string> out;
  bound_into(target, out);
  return out;
}

std::set<std::string> mutated_bases(const Node& target) {
  std::set<std::string> out;
  mutated_into(target, out);
  return out;
}

}  // namespace dlperf
