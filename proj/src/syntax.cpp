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

#include "dlperf/syntax.hpp"

#include <algorithm>

namespace dlperf {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
#define DLPERF_KIND(k) \
  case NodeKind::k:    \
    return #k;
    DLPERF_KIND(Module)
    DLPERF_KIND(FunctionDef)
    DLPERF_KIND(ClassDef)
    DLPERF_KIND(Return)
    DLPERF_KIND(Delete)
    DLPERF_KIND(Assign)
    DLPERF_KIND(AugAssign)
    DLPERF_KIND(AnnAssign)
    DLPERF_KIND(For)
    DLPERF_KIND(While)
    DLPERF_KIND(If)
    DLPERF_KIND(With)
    DLPERF_KIND(WithItem)
    DLPERF_KIND(Raise)
    DLPERF_KIND(Try)
    DLPERF_KIND(ExceptHandler)
    DLPERF_KIND(Assert)
    DLPERF_KIND(Import)
    DLPERF_KIND(ImportFrom)
    DLPERF_KIND(Alias)
    DLPERF_KIND(Global)
    DLPERF_KIND(Nonlocal)
    DLPERF_KIND(ExprStmt)
    DLPERF_KIND(Pass)
    DLPERF_KIND(Break)
    DLPERF_KIND(Continue)
    DLPERF_KIND(Match)
    DLPERF_KIND(MatchCase)
    DLPERF_KIND(BoolOp)
    DLPERF_KIND(NamedExpr)
    DLPERF_KIND(BinOp)
    DLPERF_KIND(UnaryOp)
    DLPERF_KIND(Lambda)
    DLPERF_KIND(IfExp)
    DLPERF_KIND(Dict)
    DLPERF_KIND(Set)
    DLPERF_KIND(ListComp)
    DLPERF_KIND(SetComp)
    DLPERF_KIND(DictComp)
    DLPERF_KIND(GeneratorExp)
    DLPERF_KIND(Comprehension)
    DLPERF_KIND(Await)
    DLPERF_KIND(Yield)
    DLPERF_KIND(YieldFrom)
    DLPERF_KIND(Compare)
    DLPERF_KIND(Call)
    DLPERF_KIND(Keyword)
    DLPERF_KIND(Constant)
    DLPERF_KIND(JoinedStr)
    DLPERF_KIND(Attribute)
    DLPERF_KIND(Subscript)
    DLPERF_KIND(Starred)
    DLPERF_KIND(Name)
    DLPERF_KIND(List)
    DLPERF_KIND(Tuple)
    DLPERF_KIND(Slice)
    DLPERF_KIND(Arg)
#undef DLPERF_KIND
  }
  return "?";
}

std::vector<const Node*> children(const Node& node) {
  std::vector<const Node*> out;
  auto add = [&](const Node* n) {
    if (n) out.push_back(n);
  };
  auto add_all = [&](const std::vector<Node*>& v) {
    for (const Node* n : v) add(n);
  };
  add_all(node.decorators);
  add(node.func);
  add(node.value);
  add(node.target);
  add(node.iter);
  add(node.test);
  add(node.other);
  add(node.annotation);
  add_all(node.targets);
  add_all(node.args);
  add_all(node.keywords);
  add_all(node.ifs);
  add_all(node.body);
  add_all(node.handlers);
  add_all(node.orelse);
  add_all(node.finalbody);
  std::stable_sort(out.begin(), out.end(),
                   [](const Node* a, const Node* b) { return a->range.begin < b->range.begin; });
  return out;
}

bool opens_scope(const Node& node) {
  switch (node.kind) {
    case NodeKind::FunctionDef:
    case NodeKind::ClassDef:
    case NodeKind::Lambda:
    case NodeKind::ListComp:
    case NodeKind::SetComp:
    case NodeKind::DictComp:
    case NodeKind::GeneratorExp:
      return true;
    default:
      return false;
  }
}

std::string dotted_name(const Node& node) {
  if (node.is(NodeKind::Name)) return node.name;
  if (node.is(NodeKind::Attribute) && node.value) {
    std::string base = dotted_name(*node.value);
    if (base.empty()) return {};
    return base + "." + node.name;
  }
  return {};
}

namespace {

void dump_into(const Node& node, std::string& out) {
  out += to_string(node.kind);
  out += '@';
  out += std::to_string(node.range.begin);
  out += ':';
  out += std::to_string(node.range.end);
  if (!node.name.empty()) {
    out += '<';
    out += node.name;
    out += '>';
  }
  if (!node.asname.empty()) {
    out += " as ";
    out += node.asname;
  }
  auto kids = children(node);
  if (kids.empty()) return;
  out += '(';
  bool first = true;
  for (const Node* k : kids) {
    if (!first) out += ' ';
    first = false;
    dump_into(*k, out);
  }
  out += ')';
}

}  // namespace

std::string dump(const Node& node) {
  std::string out;
  dump_into(node, out);
  return out;
}

}  // namespace dlperf
