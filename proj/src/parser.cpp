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

// Recursive-descent parser for Python 3.8+ following the precedence levels
// of the reference grammar. It builds the full statement and expression
// tree; semantic checks the compiler would perform (e.g. assignment target
// validity) are deliberately loose.

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "dlperf/source.hpp"
#include "lexer.hpp"

namespace dlperf {
namespace {

using detail::SyntaxError;
using detail::Token;
using detail::TokenKind;

constexpr std::array<std::string_view, 35> kKeywords = {
    "False", "None",   "True",    "and",      "as",     "assert", "async", "await", "break",
    "class", "continue", "def",   "del",      "elif",   "else",   "except", "finally", "for",
    "from",  "global", "if",      "import",   "in",     "is",     "lambda", "nonlocal", "not",
    "or",    "pass",   "raise",   "return",   "try",    "while",  "with",  "yield"};

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

// Nesting bound keeping recursion well inside a worker thread's stack.
constexpr int kMaxNesting = 400;

class Parser {
 public:
  Parser(std::string_view text, const LineIndex& lines, SyntaxTree& tree,
         std::vector<Token> tokens)
      : text_(text), lines_(lines), tree_(tree), toks_(std::move(tokens)) {}

  Node* parse_module() {
    Node* mod = tree_.make(NodeKind::Module, {0, text_.size()});
    while (!at(TokenKind::End)) {
      if (at(TokenKind::Newline)) {
        advance();
        continue;
      }
      if (at(TokenKind::Indent)) fail("unexpected indent");
      parse_statement(mod->body);
    }
    return mod;
  }

  Node* parse_standalone_expression() {
    Node* e = parse_star_expressions();
    if (!at(TokenKind::End)) fail("invalid syntax in f-string expression");
    return e;
  }

 private:
  // ---- token helpers -------------------------------------------------------

  const Token& cur() const { return toks_[pos_]; }
  const Token& peek(std::size_t k = 1) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at(TokenKind k) const { return cur().kind == k; }
  bool at_op(std::string_view op) const { return cur().kind == TokenKind::Op && cur().text == op; }
  bool at_kw(std::string_view kw) const { return cur().kind == TokenKind::Name && cur().text == kw; }
  bool at_name() const { return cur().kind == TokenKind::Name && !is_keyword(cur().text); }
  bool peek_op(std::size_t k, std::string_view op) const {
    return peek(k).kind == TokenKind::Op && peek(k).text == op;
  }

  const Token& advance() {
    const Token& t = toks_[pos_];
    prev_end_ = t.range.end;
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(cur().range.begin, msg); }

  void expect_op(std::string_view op) {
    if (!at_op(op)) fail("expected '" + std::string(op) + "'");
    advance();
  }
  void expect_kw(std::string_view kw) {
    if (!at_kw(kw)) fail("expected '" + std::string(kw) + "'");
    advance();
  }
  bool accept_op(std::string_view op) {
    if (!at_op(op)) return false;
    advance();
    return true;
  }
  bool accept_kw(std::string_view kw) {
    if (!at_kw(kw)) return false;
    advance();
    return true;
  }
  std::string expect_name() {
    if (!at_name()) fail("invalid syntax");
    return std::string(advance().text);
  }

  std::size_t start() const { return cur().range.begin; }
  Node* make(NodeKind k, std::size_t begin) { return tree_.make(k, {begin, prev_end_}); }
  void finish(Node* n) { n->range.end = prev_end_; }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p(p) {
      if (++p.nesting_ > kMaxNesting) p.fail("too many nested parentheses or blocks");
    }
    ~DepthGuard() { --p.nesting_; }
    Parser& p;
  };

  // ---- statements ----------------------------------------------------------

  void parse_statement(std::vector<Node*>& out) {
    DepthGuard guard(*this);
    if (at_op("@")) {
      out.push_back(parse_decorated());
      return;
    }
    if (at_kw("if")) return out.push_back(parse_if());
    if (at_kw("while")) return out.push_back(parse_while());
    if (at_kw("for")) return out.push_back(parse_for(start(), false));
    if (at_kw("with")) return out.push_back(parse_with(start(), false));
    if (at_kw("try")) return out.push_back(parse_try());
    if (at_kw("def")) return out.push_back(parse_def(start(), {}, false));
    if (at_kw("class")) return out.push_back(parse_class(start(), {}));
    if (at_kw("async")) {
      std::size_t s = start();
      advance();
      if (at_kw("def")) return out.push_back(parse_def(s, {}, true));
      if (at_kw("for")) return out.push_back(parse_for(s, true));
      if (at_kw("with")) return out.push_back(parse_with(s, true));
      fail("invalid syntax");
    }
    if (at_name() && cur().text == "match") {
      if (Node* m = try_parse_match()) return out.push_back(m);
    }
    parse_simple_statements(out);
  }

  void parse_simple_statements(std::vector<Node*>& out) {
    while (true) {
      out.push_back(parse_simple_statement());
      if (accept_op(";")) {
        if (at(TokenKind::Newline)) break;
        continue;
      }
      break;
    }
    if (!at(TokenKind::Newline)) fail("invalid syntax");
    advance();
  }

  Node* parse_simple_statement() {
    std::size_t s = start();
    if (accept_kw("pass")) return make(NodeKind::Pass, s);
    if (accept_kw("break")) return make(NodeKind::Break, s);
    if (accept_kw("continue")) return make(NodeKind::Continue, s);
    if (accept_kw("return")) {
      Node* n = make(NodeKind::Return, s);
      if (!at_statement_end()) n->value = parse_star_expressions();
      finish(n);
      return n;
    }
    if (accept_kw("raise")) {
      Node* n = make(NodeKind::Raise, s);
      if (!at_statement_end()) {
        n->value = parse_expression();
        if (accept_kw("from")) n->test = parse_expression();
      }
      finish(n);
      return n;
    }
    if (at_kw("global") || at_kw("nonlocal")) {
      NodeKind k = at_kw("global") ? NodeKind::Global : NodeKind::Nonlocal;
      advance();
      Node* n = make(k, s);
      do {
        std::size_t ns = start();
        Node* name = make(NodeKind::Name, ns);
        name->name = expect_name();
        finish(name);
        n->targets.push_back(name);
      } while (accept_op(","));
      finish(n);
      return n;
    }
    if (accept_kw("del")) {
      Node* n = make(NodeKind::Delete, s);
      do {
        if (at_statement_end()) break;
        n->targets.push_back(parse_bitor_or_star());
      } while (accept_op(","));
      finish(n);
      return n;
    }
    if (accept_kw("assert")) {
      Node* n = make(NodeKind::Assert, s);
      n->test = parse_expression();
      if (accept_op(",")) n->other = parse_expression();
      finish(n);
      return n;
    }
    if (at_kw("import")) return parse_import();
    if (at_kw("from")) return parse_from_import();
    return parse_expression_statement();
  }

  bool at_statement_end() const { return at(TokenKind::Newline) || at_op(";") || at(TokenKind::End); }

  Node* parse_import() {
    std::size_t s = start();
    expect_kw("import");
    Node* n = make(NodeKind::Import, s);
    do {
      std::size_t as = start();
      Node* alias = make(NodeKind::Alias, as);
      alias->name = parse_dotted();
      if (accept_kw("as")) alias->asname = expect_name();
      finish(alias);
      n->args.push_back(alias);
    } while (accept_op(","));
    finish(n);
    return n;
  }

  std::string parse_dotted() {
    std::string out = expect_name();
    while (accept_op(".")) out += "." + expect_name();
    return out;
  }

  Node* parse_from_import() {
    std::size_t s = start();
    expect_kw("from");
    Node* n = make(NodeKind::ImportFrom, s);
    while (at_op(".") || at_op("...")) {
      n->level += static_cast<int>(cur().text.size());
      advance();
    }
    if (!at_kw("import")) n->name = parse_dotted();
    if (n->level == 0 && n->name.empty()) fail("invalid syntax");
    expect_kw("import");
    if (at_op("*")) {
      std::size_t as = start();
      advance();
      Node* alias = make(NodeKind::Alias, as);
      alias->name = "*";
      n->args.push_back(alias);
    } else {
      bool paren = accept_op("(");
      do {
        if (paren && at_op(")")) break;
        std::size_t as = start();
        Node* alias = make(NodeKind::Alias, as);
        alias->name = expect_name();
        if (accept_kw("as")) alias->asname = expect_name();
        finish(alias);
        n->args.push_back(alias);
      } while (accept_op(","));
      if (paren) expect_op(")");
      if (n->args.empty()) fail("invalid syntax");
    }
    finish(n);
    return n;
  }

  static bool is_augassign(std::string_view op) {
    static constexpr std::array<std::string_view, 13> ops = {
        "+=", "-=", "*=", "/=", "//=", "%=", "@=", "&=", "|=", "^=", ">>=", "<<=", "**="};
    return std::find(ops.begin(), ops.end(), op) != ops.end();
  }

  Node* parse_expression_statement() {
    std::size_t s = start();
    Node* first = at_kw("yield") ? parse_yield() : parse_star_expressions();
    if (at_op(":")) {
      advance();
      Node* n = make(NodeKind::AnnAssign, s);
      n->target = first;
      n->annotation = parse_expression();
      if (accept_op("=")) n->value = at_kw("yield") ? parse_yield() : parse_star_expressions();
      finish(n);
      return n;
    }
    if (cur().kind == TokenKind::Op && is_augassign(cur().text)) {
      Node* n = make(NodeKind::AugAssign, s);
      n->name = std::string(advance().text);
      n->target = first;
      n->value = at_kw("yield") ? parse_yield() : parse_star_expressions();
      finish(n);
      return n;
    }
    if (at_op("=")) {
      Node* n = make(NodeKind::Assign, s);
      Node* last = first;
      while (accept_op("=")) {
        n->targets.push_back(last);
        last = at_kw("yield") ? parse_yield() : parse_star_expressions();
      }
      n->value = last;
      finish(n);
      return n;
    }
    Node* n = make(NodeKind::ExprStmt, s);
    n->value = first;
    finish(n);
    return n;
  }

  void parse_block(std::vector<Node*>& out) {
    expect_op(":");
    if (at(TokenKind::Newline)) {
      advance();
      if (!at(TokenKind::Indent)) fail("expected an indented block");
      advance();
      while (!at(TokenKind::Dedent) && !at(TokenKind::End)) {
        if (at(TokenKind::Newline)) {
          advance();
          continue;
        }
        parse_statement(out);
      }
      if (at(TokenKind::Dedent)) advance();
    } else {
      parse_simple_statements(out);
    }
  }

  Node* parse_if() {
    std::size_t s = start();
    advance();  // if / elif
    Node* n = make(NodeKind::If, s);
    n->test = parse_named_expression();
    parse_block(n->body);
    if (at_kw("elif")) {
      n->orelse.push_back(parse_if());
    } else if (at_kw("else")) {
      advance();
      parse_block(n->orelse);
    }
    finish(n);
    return n;
  }

  Node* parse_while() {
    std::size_t s = start();
    expect_kw("while");
    Node* n = make(NodeKind::While, s);
    n->test = parse_named_expression();
    parse_block(n->body);
    if (accept_kw("else")) parse_block(n->orelse);
    finish(n);
    return n;
  }

  Node* parse_for(std::size_t s, bool is_async) {
    expect_kw("for");
    Node* n = make(NodeKind::For, s);
    n->is_async = is_async;
    n->target = parse_targets();
    expect_kw("in");
    n->iter = parse_star_expressions();
    parse_block(n->body);
    if (accept_kw("else")) parse_block(n->orelse);
    finish(n);
    return n;
  }

  // Comma-separated assignment targets at bitwise-or precedence so that a
  // following `in` is left alone.
  Node* parse_targets() {
    std::size_t s = start();
    Node* first = parse_bitor_or_star();
    if (!at_op(",")) return first;
    Node* tup = make(NodeKind::Tuple, s);
    tup->args.push_back(first);
    while (accept_op(",")) {
      if (at_kw("in") || at_op("=")) break;
      tup->args.push_back(parse_bitor_or_star());
    }
    finish(tup);
    return tup;
  }

  Node* parse_bitor_or_star() {
    if (at_op("*")) {
      std::size_t s = start();
      advance();
      Node* n = make(NodeKind::Starred, s);
      n->value = parse_bitor();
      finish(n);
      return n;
    }
    return parse_bitor();
  }

  Node* parse_with(std::size_t s, bool is_async) {
    expect_kw("with");
    Node* n = make(NodeKind::With, s);
    n->is_async = is_async;
    if (at_op("(") && parenthesized_with_items()) {
      advance();
      do {
        if (at_op(")")) break;
        n->args.push_back(parse_with_item());
      } while (accept_op(","));
      expect_op(")");
    } else {
      do {
        n->args.push_back(parse_with_item());
      } while (accept_op(","));
    }
    parse_block(n->body);
    finish(n);
    return n;
  }

  // Distinguishes `with (a as b, c):` from `with (a, b) as c:` by scanning to
  // the matching parenthesis and checking what follows.
  bool parenthesized_with_items() const {
    int depth = 0;
    for (std::size_t i = pos_; i < toks_.size(); ++i) {
      const Token& t = toks_[i];
      if (t.kind == TokenKind::End || t.kind == TokenKind::Newline) return false;
      if (t.kind != TokenKind::Op) continue;
      if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
      if (t.text == ")" || t.text == "]" || t.text == "}") {
        if (--depth == 0) {
          const Token& next = toks_[std::min(i + 1, toks_.size() - 1)];
          return next.kind == TokenKind::Op && next.text == ":";
        }
      }
    }
    return false;
  }

  Node* parse_with_item() {
    std::size_t s = start();
    Node* item = make(NodeKind::WithItem, s);
    item->value = parse_expression();
    if (accept_kw("as")) item->target = parse_bitor_or_star_target();
    finish(item);
    return item;
  }

  Node* parse_bitor_or_star_target() {
    if (at_op("(") || at_op("[")) return parse_primary();
    return parse_bitor_or_star();
  }

  Node* parse_try() {
    std::size_t s = start();
    expect_kw("try");
    Node* n = make(NodeKind::Try, s);
    parse_block(n->body);
    while (at_kw("except")) {
      std::size_t hs = start();
      advance();
      accept_op("*");
      Node* h = make(NodeKind::ExceptHandler, hs);
      if (!at_op(":")) {
        h->target = parse_expression();
        if (at_op(",")) {
          std::size_t ts = h->target->range.begin;
          Node* tup = make(NodeKind::Tuple, ts);
          tup->args.push_back(h->target);
          while (accept_op(",")) {
            if (at_op(":") || at_kw("as")) break;
            tup->args.push_back(parse_expression());
          }
          finish(tup);
          h->target = tup;
        }
        if (accept_kw("as")) h->name = expect_name();
      }
      parse_block(h->body);
      finish(h);
      n->handlers.push_back(h);
    }
    if (accept_kw("else")) parse_block(n->orelse);
    if (accept_kw("finally")) parse_block(n->finalbody);
    if (n->handlers.empty() && n->finalbody.empty()) fail("expected 'except' or 'finally' block");
    finish(n);
    return n;
  }

  Node* parse_decorated() {
    std::size_t s = start();
    std::vector<Node*> decorators;
    while (accept_op("@")) {
      decorators.push_back(parse_named_expression());
      if (!at(TokenKind::Newline)) fail("invalid syntax");
      advance();
    }
    if (at_kw("def")) return parse_def(s, std::move(decorators), false);
    if (at_kw("class")) return parse_class(s, std::move(decorators));
    if (at_kw("async")) {
      advance();
      if (at_kw("def")) return parse_def(s, std::move(decorators), true);
    }
    fail("invalid syntax");
  }

  Node* parse_def(std::size_t s, std::vector<Node*> decorators, bool is_async) {
    expect_kw("def");
    Node* n = make(NodeKind::FunctionDef, s);
    n->is_async = is_async;
    n->decorators = std::move(decorators);
    n->name = expect_name();
    expect_op("(");
    parse_parameters(n->args, ")", true);
    expect_op(")");
    if (accept_op("->")) n->annotation = parse_expression();
    parse_block(n->body);
    finish(n);
    return n;
  }

  void parse_parameters(std::vector<Node*>& out, std::string_view close, bool annotations) {
    bool keyword_only = false;
    bool seen_default = false;
    while (!at_op(close)) {
      std::size_t s = start();
      if (accept_op("/")) {
        for (Node* p : out) {
          if (p->param_kind == ParamKind::Positional) p->param_kind = ParamKind::PositionalOnly;
        }
      } else if (accept_op("**")) {
        Node* a = make(NodeKind::Arg, s);
        a->param_kind = ParamKind::VarKeywords;
        a->name = expect_name();
        if (annotations && accept_op(":")) a->annotation = parse_expression();
        finish(a);
        out.push_back(a);
      } else if (accept_op("*")) {
        keyword_only = true;
        if (at_name()) {
          Node* a = make(NodeKind::Arg, s);
          a->param_kind = ParamKind::VarArgs;
          a->name = expect_name();
          if (annotations && accept_op(":")) a->annotation = parse_star_annotation();
          finish(a);
          out.push_back(a);
        }
      } else {
        Node* a = make(NodeKind::Arg, s);
        a->param_kind = keyword_only ? ParamKind::KeywordOnly : ParamKind::Positional;
        a->name = expect_name();
        if (annotations && accept_op(":")) a->annotation = parse_expression();
        if (accept_op("=")) {
          a->value = parse_expression();
          seen_default = true;
        } else if (seen_default && !keyword_only) {
          fail("non-default argument follows default argument");
        }
        finish(a);
        out.push_back(a);
      }
      if (!accept_op(",")) break;
    }
  }

  Node* parse_star_annotation() {
    if (at_op("*")) return parse_bitor_or_star();
    return parse_expression();
  }

  Node* parse_class(std::size_t s, std::vector<Node*> decorators) {
    expect_kw("class");
    Node* n = make(NodeKind::ClassDef, s);
    n->decorators = std::move(decorators);
    n->name = expect_name();
    if (accept_op("(")) {
      parse_call_arguments(n->args, n->keywords);
      expect_op(")");
    }
    parse_block(n->body);
    finish(n);
    return n;
  }

  // `match` is a soft keyword: attempt the statement form and fall back to
  // an ordinary expression statement when it does not fit.
  Node* try_parse_match() {
    std::size_t saved = pos_;
    std::size_t saved_end = prev_end_;
    std::size_t s = start();
    bool committed = false;
    try {
      advance();
      if (at_op("=") || at_op(".") || at(TokenKind::Newline)) throw SyntaxError(0, "");
      Node* subject = parse_star_expressions();
      if (!at_op(":") || peek().kind != TokenKind::Newline || peek(2).kind != TokenKind::Indent ||
          !(peek(3).kind == TokenKind::Name && peek(3).text == "case")) {
        throw SyntaxError(0, "");
      }
      Node* n = make(NodeKind::Match, s);
      n->value = subject;
      advance();  // :
      advance();  // NEWLINE
      advance();  // INDENT
      committed = true;
      while (at_name() && cur().text == "case") n->handlers.push_back(parse_case());
      if (!at(TokenKind::Dedent)) fail("expected 'case' block");
      advance();
      finish(n);
      return n;
    } catch (const SyntaxError&) {
      if (committed) throw;
      pos_ = saved;
      prev_end_ = saved_end;
      return nullptr;
    }
  }

  Node* parse_case() {
    std::size_t s = start();
    advance();  // case
    Node* n = make(NodeKind::MatchCase, s);
    std::size_t ps = start();
    Node* first = parse_pattern();
    if (at_op(",")) {
      Node* tup = make(NodeKind::Tuple, ps);
      tup->args.push_back(first);
      while (accept_op(",")) {
        if (at_op(":") || at_kw("if")) break;
        tup->args.push_back(parse_pattern());
      }
      finish(tup);
      first = tup;
    }
    n->value = first;
    if (accept_kw("if")) n->test = parse_named_expression();
    parse_block(n->body);
    finish(n);
    return n;
  }

  Node* parse_pattern() {
    std::size_t s = start();
    Node* p = parse_bitor_or_star();
    if (accept_kw("as")) {
      Node* bound = make(NodeKind::NamedExpr, s);
      std::size_t ns = start();
      Node* name = make(NodeKind::Name, ns);
      name->name = expect_name();
      finish(name);
      bound->target = name;
      bound->value = p;
      finish(bound);
      return bound;
    }
    return p;
  }

  // ---- expressions ---------------------------------------------------------

  Node* parse_star_expressions() {
    std::size_t s = start();
    Node* first = parse_star_expression();
    if (!at_op(",")) return first;
    Node* tup = make(NodeKind::Tuple, s);
    tup->args.push_back(first);
    while (accept_op(",")) {
      if (!starts_expression()) break;
      tup->args.push_back(parse_star_expression());
    }
    finish(tup);
    return tup;
  }

  bool starts_expression() const {
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::Name:
        if (!is_keyword(t.text)) return true;
        return t.text == "None" || t.text == "True" || t.text == "False" || t.text == "not" ||
               t.text == "lambda" || t.text == "await" || t.text == "yield";
      case TokenKind::Number:
      case TokenKind::String:
        return true;
      case TokenKind::Op:
        return t.text == "(" || t.text == "[" || t.text == "{" || t.text == "-" || t.text == "+" ||
               t.text == "~" || t.text == "*" || t.text == "..." || t.text == "**";
      default:
        return false;
    }
  }

  Node* parse_star_expression() {
    if (at_op("*")) return parse_bitor_or_star();
    return parse_expression();
  }

  Node* parse_named_expression() {
    if (at_name() && peek_op(1, ":=")) {
      std::size_t s = start();
      Node* n = make(NodeKind::NamedExpr, s);
      Node* name = make(NodeKind::Name, s);
      name->name = std::string(advance().text);
      finish(name);
      advance();  // :=
      n->target = name;
      n->value = parse_expression();
      finish(n);
      return n;
    }
    return parse_expression();
  }

  Node* parse_expression() {
    DepthGuard guard(*this);
    if (at_kw("lambda")) return parse_lambda();
    std::size_t s = start();
    Node* body = parse_disjunction();
    if (at_kw("if")) {
      advance();
      Node* n = make(NodeKind::IfExp, s);
      n->value = body;
      n->test = parse_disjunction();
      expect_kw("else");
      n->other = parse_expression();
      finish(n);
      return n;
    }
    return body;
  }

  Node* parse_lambda() {
    std::size_t s = start();
    expect_kw("lambda");
    Node* n = make(NodeKind::Lambda, s);
    parse_parameters(n->args, ":", false);
    expect_op(":");
    n->value = parse_expression();
    finish(n);
    return n;
  }

  Node* parse_disjunction() {
    std::size_t s = start();
    Node* first = parse_conjunction();
    if (!at_kw("or")) return first;
    Node* n = make(NodeKind::BoolOp, s);
    n->name = "or";
    n->args.push_back(first);
    while (accept_kw("or")) n->args.push_back(parse_conjunction());
    finish(n);
    return n;
  }

  Node* parse_conjunction() {
    std::size_t s = start();
    Node* first = parse_inversion();
    if (!at_kw("and")) return first;
    Node* n = make(NodeKind::BoolOp, s);
    n->name = "and";
    n->args.push_back(first);
    while (accept_kw("and")) n->args.push_back(parse_inversion());
    finish(n);
    return n;
  }

  Node* parse_inversion() {
    if (at_kw("not")) {
      DepthGuard guard(*this);
      std::size_t s = start();
      advance();
      Node* n = make(NodeKind::UnaryOp, s);
      n->name = "not";
      n->value = parse_inversion();
      finish(n);
      return n;
    }
    return parse_comparison();
  }

  std::string comparison_operator() {
    if (cur().kind == TokenKind::Op) {
      std::string_view t = cur().text;
      if (t == "==" || t == "!=" || t == "<" || t == "<=" || t == ">" || t == ">=") {
        advance();
        return std::string(t);
      }
      return {};
    }
    if (at_kw("in")) {
      advance();
      return "in";
    }
    if (at_kw("not") && peek().kind == TokenKind::Name && peek().text == "in") {
      advance();
      advance();
      return "not in";
    }
    if (at_kw("is")) {
      advance();
      if (accept_kw("not")) return "is not";
      return "is";
    }
    return {};
  }

  Node* parse_comparison() {
    std::size_t s = start();
    Node* first = parse_bitor();
    std::string op = comparison_operator();
    if (op.empty()) return first;
    Node* n = make(NodeKind::Compare, s);
    n->args.push_back(first);
    std::string ops;
    while (!op.empty()) {
      if (!ops.empty()) ops += ",";
      ops += op;
      n->args.push_back(parse_bitor());
      op = comparison_operator();
    }
    n->name = ops;
    finish(n);
    return n;
  }

  template <typename Next>
  Node* parse_binary(std::initializer_list<std::string_view> ops, Next next) {
    std::size_t s = start();
    Node* left = (this->*next)();
    while (cur().kind == TokenKind::Op &&
           std::find(ops.begin(), ops.end(), cur().text) != ops.end()) {
      std::string op(advance().text);
      Node* n = make(NodeKind::BinOp, s);
      n->name = op;
      n->value = left;
      n->other = (this->*next)();
      finish(n);
      left = n;
    }
    return left;
  }

  Node* parse_bitor() { return parse_binary({"|"}, &Parser::parse_bitxor); }
  Node* parse_bitxor() { return parse_binary({"^"}, &Parser::parse_bitand); }
  Node* parse_bitand() { return parse_binary({"&"}, &Parser::parse_shift); }
  Node* parse_shift() { return parse_binary({"<<", ">>"}, &Parser::parse_sum); }
  Node* parse_sum() { return parse_binary({"+", "-"}, &Parser::parse_term); }
  Node* parse_term() { return parse_binary({"*", "/", "//", "%", "@"}, &Parser::parse_factor); }

  Node* parse_factor() {
    if (at_op("+") || at_op("-") || at_op("~")) {
      DepthGuard guard(*this);
      std::size_t s = start();
      std::string op(advance().text);
      Node* n = make(NodeKind::UnaryOp, s);
      n->name = op;
      n->value = parse_factor();
      finish(n);
      return n;
    }
    return parse_power();
  }

  Node* parse_power() {
    std::size_t s = start();
    Node* base = parse_await_primary();
    if (at_op("**")) {
      advance();
      Node* n = make(NodeKind::BinOp, s);
      n->name = "**";
      n->value = base;
      n->other = parse_factor();
      finish(n);
      return n;
    }
    return base;
  }

  Node* parse_await_primary() {
    if (at_kw("await")) {
      std::size_t s = start();
      advance();
      Node* n = make(NodeKind::Await, s);
      n->value = parse_primary();
      finish(n);
      return n;
    }
    return parse_primary();
  }

  Node* parse_primary() {
    std::size_t s = start();
    Node* e = parse_atom();
    while (true) {
      if (at_op(".")) {
        advance();
        Node* n = make(NodeKind::Attribute, s);
        n->value = e;
        n->name = expect_name();
        finish(n);
        e = n;
      } else if (at_op("(")) {
        advance();
        Node* n = make(NodeKind::Call, s);
        n->func = e;
        parse_call_arguments(n->args, n->keywords);
        expect_op(")");
        finish(n);
        e = n;
      } else if (at_op("[")) {
        advance();
        Node* n = make(NodeKind::Subscript, s);
        n->value = e;
        n->other = parse_slices();
        expect_op("]");
        finish(n);
        e = n;
      } else {
        return e;
      }
    }
  }

  void parse_call_arguments(std::vector<Node*>& args, std::vector<Node*>& keywords) {
    while (!at_op(")")) {
      std::size_t s = start();
      if (accept_op("*")) {
        Node* n = make(NodeKind::Starred, s);
        n->value = parse_expression();
        finish(n);
        args.push_back(n);
      } else if (accept_op("**")) {
        Node* n = make(NodeKind::Keyword, s);
        n->value = parse_expression();
        finish(n);
        keywords.push_back(n);
      } else if (at_name() && peek_op(1, "=")) {
        Node* n = make(NodeKind::Keyword, s);
        n->name = std::string(advance().text);
        advance();  // =
        n->value = parse_expression();
        finish(n);
        keywords.push_back(n);
      } else {
        Node* e = parse_named_expression();
        if (at_kw("for") || at_kw("async")) e = parse_comprehension_tail(NodeKind::GeneratorExp, s, e);
        args.push_back(e);
      }
      if (!accept_op(",")) break;
    }
  }

  Node* parse_slices() {
    std::size_t s = start();
    Node* first = parse_slice();
    if (!at_op(",")) return first;
    Node* tup = make(NodeKind::Tuple, s);
    tup->args.push_back(first);
    while (accept_op(",")) {
      if (at_op("]")) break;
      tup->args.push_back(parse_slice());
    }
    finish(tup);
    return tup;
  }

  Node* parse_slice() {
    std::size_t s = start();
    Node* lower = nullptr;
    if (!at_op(":")) {
      lower = parse_star_or_named();
      if (!at_op(":")) return lower;
    }
    Node* n = make(NodeKind::Slice, s);
    n->value = lower;
    advance();  // :
    if (!at_op(":") && !at_op("]") && !at_op(",")) n->iter = parse_expression();
    if (accept_op(":")) {
      if (!at_op("]") && !at_op(",")) n->other = parse_expression();
    }
    finish(n);
    return n;
  }

  Node* parse_star_or_named() {
    if (at_op("*")) return parse_bitor_or_star();
    return parse_named_expression();
  }

  Node* parse_yield() {
    std::size_t s = start();
    expect_kw("yield");
    if (accept_kw("from")) {
      Node* n = make(NodeKind::YieldFrom, s);
      n->value = parse_expression();
      finish(n);
      return n;
    }
    Node* n = make(NodeKind::Yield, s);
    if (starts_expression()) n->value = parse_star_expressions();
    finish(n);
    return n;
  }

  Node* parse_atom() {
    DepthGuard guard(*this);
    std::size_t s = start();
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::Name: {
        if (t.text == "None" || t.text == "True" || t.text == "False") {
          advance();
          Node* n = make(NodeKind::Constant, s);
          n->name = std::string(t.text);
          return n;
        }
        if (is_keyword(t.text)) fail("invalid syntax");
        advance();
        Node* n = make(NodeKind::Name, s);
        n->name = std::string(t.text);
        return n;
      }
      case TokenKind::Number: {
        advance();
        Node* n = make(NodeKind::Constant, s);
        n->name = std::string(t.text);
        return n;
      }
      case TokenKind::String:
        return parse_strings();
      case TokenKind::Op:
        if (t.text == "...") {
          advance();
          Node* n = make(NodeKind::Constant, s);
          n->name = "...";
          return n;
        }
        if (t.text == "(") return parse_paren();
        if (t.text == "[") return parse_list();
        if (t.text == "{") return parse_brace();
        break;
      default:
        break;
    }
    fail("invalid syntax");
  }

  Node* parse_strings() {
    std::size_t s = start();
    std::vector<Token> parts;
    while (at(TokenKind::String)) parts.push_back(advance());
    bool formatted = std::any_of(parts.begin(), parts.end(), [](const Token& t) { return t.formatted; });
    Node* n = make(formatted ? NodeKind::JoinedStr : NodeKind::Constant, s);
    n->name = std::string(text_.substr(n->range.begin, n->range.end - n->range.begin));
    for (const Token& part : parts) {
      if (part.formatted) parse_fstring_fields(part.body, part.raw, n->args);
    }
    return n;
  }

  // Extracts `{expr}` replacement fields (including ones nested in format
  // specs) and parses each expression in place.
  void parse_fstring_fields(ByteRange body, bool raw, std::vector<Node*>& out) {
    std::size_t p = body.begin;
    while (p < body.end) {
      char c = text_[p];
      if (c == '\\' && !raw) {
        if (p + 2 < body.end && text_[p + 1] == 'N' && text_[p + 2] == '{') {
          while (p < body.end && text_[p] != '}') ++p;
          ++p;
        } else {
          p += 2;
        }
        continue;
      }
      if (c == '{') {
        if (p + 1 < body.end && text_[p + 1] == '{') {
          p += 2;
          continue;
        }
        p = parse_fstring_field(p + 1, body.end, out);
        continue;
      }
      ++p;
    }
  }

  // Parses one replacement field whose expression starts at `p`; returns the
  // offset just past the closing brace.
  std::size_t parse_fstring_field(std::size_t p, std::size_t end, std::vector<Node*>& out) {
    std::size_t expr_begin = p;
    int depth = 0;
    char quote = 0;
    while (p < end) {
      char c = text_[p];
      if (quote) {
        if (c == '\\') {
          p += 2;
          continue;
        }
        if (c == quote) quote = 0;
        ++p;
        continue;
      }
      if (c == '\'' || c == '"') {
        quote = c;
      } else if (c == '(' || c == '[' || c == '{') {
        ++depth;
      } else if (c == ')' || c == ']' || c == '}') {
        if (depth == 0) break;
        --depth;
      } else if (depth == 0 && c == '!' && (p + 1 >= end || text_[p + 1] != '=')) {
        break;
      } else if (depth == 0 && c == ':') {
        break;
      } else if (depth == 0 && c == '=' && is_debug_specifier(p, expr_begin, end)) {
        break;
      }
      ++p;
    }
    if (p >= end) throw SyntaxError(expr_begin, "f-string: expecting '}'");
    std::size_t expr_end = p;
    out.push_back(parse_embedded_expression(expr_begin, expr_end));
    if (text_[p] == '=') ++p;
    while (p < end && text_[p] == ' ') ++p;
    if (p < end && text_[p] == '!') {
      p += 2;
    }
    if (p < end && text_[p] == ':') {
      ++p;
      while (p < end && text_[p] != '}') {
        if (text_[p] == '{') {
          p = parse_fstring_field(p + 1, end, out);
          continue;
        }
        ++p;
      }
    }
    if (p >= end || text_[p] != '}') throw SyntaxError(expr_begin, "f-string: expecting '}'");
    return p + 1;
  }

  // `{x = }` style self-documenting field.
  bool is_debug_specifier(std::size_t p, std::size_t expr_begin, std::size_t end) const {
    if (p == expr_begin || std::string_view("=!<>").find(text_[p - 1]) != std::string_view::npos) {
      return false;
    }
    std::size_t q = p + 1;
    while (q < end && text_[q] == ' ') ++q;
    return q < end && (text_[q] == '}' || text_[q] == '!' || text_[q] == ':');
  }

  Node* parse_embedded_expression(std::size_t begin, std::size_t end) {
    if (std::all_of(text_.begin() + static_cast<std::ptrdiff_t>(begin),
                    text_.begin() + static_cast<std::ptrdiff_t>(end),
                    [](char c) { return c == ' ' || c == '\t' || c == '\n'; })) {
      throw SyntaxError(begin, "f-string: empty expression not allowed");
    }
    auto lexed = detail::tokenize_expression(text_, lines_, begin, end);
    Parser sub(text_, lines_, tree_, std::move(lexed.tokens));
    sub.nesting_ = nesting_;
    return sub.parse_standalone_expression();
  }

  Node* parse_paren() {
    std::size_t s = start();
    expect_op("(");
    if (accept_op(")")) {
      Node* n = make(NodeKind::Tuple, s);
      return n;
    }
    if (at_kw("yield")) {
      Node* y = parse_yield();
      expect_op(")");
      return y;
    }
    Node* first = parse_star_or_named();
    if (at_kw("for") || at_kw("async")) {
      Node* g = parse_comprehension_tail(NodeKind::GeneratorExp, s, first);
      expect_op(")");
      finish(g);
      return g;
    }
    if (accept_op(")")) {
      // Parenthesized expression keeps the inner node; widen nothing so spans
      // stay on the expression itself.
      return first;
    }
    Node* tup = make(NodeKind::Tuple, s);
    tup->args.push_back(first);
    while (accept_op(",")) {
      if (at_op(")")) break;
      tup->args.push_back(parse_star_or_named());
    }
    expect_op(")");
    finish(tup);
    return tup;
  }

  Node* parse_list() {
    std::size_t s = start();
    expect_op("[");
    Node* n = make(NodeKind::List, s);
    if (accept_op("]")) return n;
    Node* first = parse_star_or_named();
    if (at_kw("for") || at_kw("async")) {
      Node* c = parse_comprehension_tail(NodeKind::ListComp, s, first);
      expect_op("]");
      finish(c);
      return c;
    }
    n->args.push_back(first);
    while (accept_op(",")) {
      if (at_op("]")) break;
      n->args.push_back(parse_star_or_named());
    }
    expect_op("]");
    finish(n);
    return n;
  }

  Node* parse_brace() {
    std::size_t s = start();
    expect_op("{");
    if (accept_op("}")) return make(NodeKind::Dict, s);
    if (at_op("**")) return parse_dict_rest(s, nullptr);
    Node* first = parse_star_or_named();
    if (accept_op(":")) {
      Node* value = parse_expression();
      if (at_kw("for") || at_kw("async")) {
        Node* c = parse_comprehension_tail(NodeKind::DictComp, s, value);
        c->other = first;
        expect_op("}");
        finish(c);
        return c;
      }
      Node* entry = tree_.make(NodeKind::Keyword, {first->range.begin, value->range.end});
      entry->other = first;
      entry->value = value;
      return parse_dict_rest(s, entry);
    }
    if (at_kw("for") || at_kw("async")) {
      Node* c = parse_comprehension_tail(NodeKind::SetComp, s, first);
      expect_op("}");
      finish(c);
      return c;
    }
    Node* set = make(NodeKind::Set, s);
    set->args.push_back(first);
    while (accept_op(",")) {
      if (at_op("}")) break;
      set->args.push_back(parse_star_or_named());
    }
    expect_op("}");
    finish(set);
    return set;
  }

  Node* parse_dict_rest(std::size_t s, Node* first_entry) {
    Node* dict = make(NodeKind::Dict, s);
    if (first_entry) {
      dict->args.push_back(first_entry);
      if (!accept_op(",")) {
        expect_op("}");
        finish(dict);
        return dict;
      }
    }
    while (!at_op("}")) {
      std::size_t es = start();
      if (accept_op("**")) {
        Node* entry = make(NodeKind::Keyword, es);
        entry->value = parse_bitor();
        finish(entry);
        dict->args.push_back(entry);
      } else {
        Node* key = parse_expression();
        expect_op(":");
        Node* entry = make(NodeKind::Keyword, es);
        entry->other = key;
        entry->value = parse_expression();
        finish(entry);
        dict->args.push_back(entry);
      }
      if (!accept_op(",")) break;
    }
    expect_op("}");
    finish(dict);
    return dict;
  }

  Node* parse_comprehension_tail(NodeKind kind, std::size_t s, Node* element) {
    Node* n = make(kind, s);
    n->value = element;
    while (at_kw("for") || at_kw("async")) {
      std::size_t gs = start();
      Node* gen = make(NodeKind::Comprehension, gs);
      if (accept_kw("async")) gen->is_async = true;
      expect_kw("for");
      gen->target = parse_targets();
      expect_kw("in");
      gen->iter = parse_disjunction();
      while (accept_kw("if")) gen->ifs.push_back(parse_disjunction());
      finish(gen);
      n->args.push_back(gen);
    }
    finish(n);
    return n;
  }

  std::string_view text_;
  const LineIndex& lines_;
  SyntaxTree& tree_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t prev_end_ = 0;
  int nesting_ = 0;
};

std::string normalize_path(const std::filesystem::path& p) { return p.generic_string(); }

}  // namespace

SourceUnit::SourceUnit(std::filesystem::path path, std::string text, SyntaxTree tree,
                       LineIndex lines, std::vector<Comment> comments, std::string module_name)
    : path_(std::move(path)),
      display_path_(normalize_path(path_)),
      text_(std::move(text)),
      tree_(std::move(tree)),
      lines_(std::move(lines)),
      comments_(std::move(comments)),
      module_name_(std::move(module_name)) {}

std::string_view SourceUnit::source(ByteRange range) const {
  range.end = std::min(range.end, text_.size());
  range.begin = std::min(range.begin, range.end);
  return std::string_view(text_).substr(range.begin, range.end - range.begin);
}

std::vector<const Comment*> SourceUnit::comments_on(int line) const {
  std::vector<const Comment*> out;
  auto it = std::lower_bound(comments_.begin(), comments_.end(), line,
                             [](const Comment& c, int l) { return c.line < l; });
  for (; it != comments_.end() && it->line == line; ++it) out.push_back(&*it);
  return out;
}

std::string module_name_for(const std::filesystem::path& relative) {
  std::string out;
  std::filesystem::path rel = relative;
  rel.replace_extension();
  for (const auto& part : rel) {
    std::string s = part.generic_string();
    if (s.empty() || s == "." || s == "/") continue;
    if (!out.empty()) out += ".";
    out += s;
  }
  const std::string suffix = "__init__";
  if (out == suffix) return out;
  if (out.size() > suffix.size() + 1 && out.ends_with("." + suffix)) {
    out.resize(out.size() - suffix.size() - 1);
  }
  return out;
}

ParseOutcome parse_source(const std::filesystem::path& path, std::string text,
                          std::string module_name) {
  LineIndex lines(text);
  if (module_name.empty()) module_name = module_name_for(path.filename());
  try {
    auto lexed = detail::tokenize(text, lines);
    SyntaxTree tree;
    Parser parser(text, lines, tree, std::move(lexed.tokens));
    tree.set_root(parser.parse_module());
    auto unit = std::make_shared<const SourceUnit>(path, std::move(text), std::move(tree),
                                                   std::move(lines), std::move(lexed.comments),
                                                   std::move(module_name));
    return ParseOutcome{std::move(unit), std::nullopt};
  } catch (const detail::SyntaxError& e) {
    Position p = lines.position(std::min(e.offset(), text.size()));
    return ParseOutcome{nullptr, ParseError{{p.line, p.col, p.line, p.col}, e.what()}};
  }
}

}  // namespace dlperf
