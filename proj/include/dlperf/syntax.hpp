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

// Syntax tree for the analyzed language (Python 3.8+).
//
// Nodes live in an arena owned by SyntaxTree and refer to each other through
// non-owning pointers. The tree is immutable once the parser hands it over.
// Each node kind uses a fixed subset of the fields below; the comments on
// the fields list which kinds populate them.

#ifndef DLPERF_SYNTAX_HPP_
#define DLPERF_SYNTAX_HPP_

#include <deque>
#include <string>
#include <string_view>
#include <vector>

#include "dlperf/span.hpp"

namespace dlperf {

enum class NodeKind {
  // statements
  Module,
  FunctionDef,
  ClassDef,
  Return,
  Delete,
  Assign,
  AugAssign,
  AnnAssign,
  For,
  While,
  If,
  With,
  WithItem,
  Raise,
  Try,
  ExceptHandler,
  Assert,
  Import,
  ImportFrom,
  Alias,
  Global,
  Nonlocal,
  ExprStmt,
  Pass,
  Break,
  Continue,
  Match,
  MatchCase,
  // expressions
  BoolOp,
  NamedExpr,
  BinOp,
  UnaryOp,
  Lambda,
  IfExp,
  Dict,
  Set,
  ListComp,
  SetComp,
  DictComp,
  GeneratorExp,
  Comprehension,
  Await,
  Yield,
  YieldFrom,
  Compare,
  Call,
  Keyword,
  Constant,
  JoinedStr,
  Attribute,
  Subscript,
  Starred,
  Name,
  List,
  Tuple,
  Slice,
  Arg,
};

std::string_view to_string(NodeKind kind);

/// Parameter flavours for NodeKind::Arg.
enum class ParamKind { Positional, PositionalOnly, VarArgs, KeywordOnly, VarKeywords };

struct Node {
  NodeKind kind = NodeKind::Pass;
  ByteRange range;

  /// Name.id, Attribute.attr, Keyword.arg (empty for `**x`), FunctionDef /
  /// ClassDef / Arg name, Alias module path, ImportFrom module path,
  /// Constant source text, operator spelling for BinOp/UnaryOp/BoolOp/
  /// AugAssign, comma-joined operators for Compare.
  std::string name;
  /// Alias `as` name.
  std::string asname;
  /// ImportFrom relative level (number of leading dots).
  int level = 0;
  bool is_async = false;
  ParamKind param_kind = ParamKind::Positional;

  /// Call.func.
  Node* func = nullptr;
  /// Receiver or operand: Attribute/Subscript/Starred receiver, BinOp left
  /// operand, IfExp then branch, assignment value, Return/ExprStmt/Keyword/
  /// NamedExpr/Yield/Await/UnaryOp operand, Arg default, Lambda body,
  /// Dict entry / DictComp value, MatchCase pattern, Match subject, WithItem
  /// context expression, Raise exception, Slice lower.
  Node* value = nullptr;
  /// For/Comprehension/AugAssign/AnnAssign/NamedExpr target, WithItem
  /// `as` target, ExceptHandler exception type.
  Node* target = nullptr;
  /// For/Comprehension iterable, Slice upper.
  Node* iter = nullptr;
  /// If/While/IfExp/Assert condition, MatchCase guard, Raise cause.
  Node* test = nullptr;
  /// Subscript index, BinOp right operand, IfExp else branch, Assert message,
  /// Slice step, Dict entry / DictComp key expression.
  Node* other = nullptr;
  /// Annotation on Arg, AnnAssign, and FunctionDef return.
  Node* annotation = nullptr;

  /// Assign targets (chained `a = b = v`), Delete targets, Global/Nonlocal
  /// names (as Name nodes).
  std::vector<Node*> targets;
  /// Call positional arguments (Starred for `*x`), BoolOp/Compare operands,
  /// List/Tuple/Set elements, Dict entries (Keyword nodes whose `other` is the
  /// key, null for `**m`), ClassDef bases, FunctionDef/Lambda parameters
  /// (Arg), Import/ImportFrom aliases, With items, JoinedStr embedded
  /// expressions, comprehension generators.
  std::vector<Node*> args;
  /// Call and ClassDef keyword arguments (Keyword nodes).
  std::vector<Node*> keywords;
  /// Compound statement bodies.
  std::vector<Node*> body;
  std::vector<Node*> orelse;
  std::vector<Node*> finalbody;
  /// Try handlers, Match cases.
  std::vector<Node*> handlers;
  std::vector<Node*> decorators;
  /// Comprehension `if` filters.
  std::vector<Node*> ifs;

  bool is(NodeKind k) const { return kind == k; }
};

/// Owns every node of one parsed file.
class SyntaxTree {
 public:
  SyntaxTree() = default;
  SyntaxTree(const SyntaxTree&) = delete;
  SyntaxTree& operator=(const SyntaxTree&) = delete;
  SyntaxTree(SyntaxTree&&) = default;
  SyntaxTree& operator=(SyntaxTree&&) = default;

  Node* make(NodeKind kind, ByteRange range) {
    Node& n = nodes_.emplace_back();
    n.kind = kind;
    n.range = range;
    return &n;
  }

  const Node* root() const { return root_; }
  void set_root(Node* root) { root_ = root; }
  std::size_t size() const { return nodes_.size(); }

 private:
  std::deque<Node> nodes_;
  Node* root_ = nullptr;
};

/// Direct children of `node` in source order.
std::vector<const Node*> children(const Node& node);

/// True for nodes that open a new name scope (def, class, lambda and the
/// comprehension forms).
bool opens_scope(const Node& node);

/// Renders a Name/Attribute chain as dotted text, or "" if the expression is
/// anything else.
std::string dotted_name(const Node& node);

/// Structural dump used by tests for determinism checks.
std::string dump(const Node& node);

}  // namespace dlperf

#endif  // DLPERF_SYNTAX_HPP_
