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

#include "lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstring>

namespace dlperf::detail {
namespace {

bool is_ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c >= 0x80;
}

bool is_ident_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c >= 0x80;
}

bool is_string_prefix(std::string_view p) {
  if (p.size() > 2) return false;
  bool has_b = false, has_f = false, has_u = false, has_r = false;
  for (char c : p) {
    switch (std::tolower(static_cast<unsigned char>(c))) {
      case 'b':
        if (has_b) return false;
        has_b = true;
        break;
      case 'f':
        if (has_f) return false;
        has_f = true;
        break;
      case 'u':
        if (has_u) return false;
        has_u = true;
        break;
      case 'r':
        if (has_r) return false;
        has_r = true;
        break;
      default:
        return false;
    }
  }
  if (has_u && p.size() > 1) return false;
  if (has_b && has_f) return false;
  return true;
}

// Longest first.
constexpr std::array<std::string_view, 48> kOperators = {
    "**=", "//=", ">>=", "<<=", "...", "->", ":=", "**", "//", ">>", "<<", "<=",
    ">=",  "==",  "!=",  "+=",  "-=",  "*=", "/=", "%=", "&=", "|=", "^=", "@=",
    "+",   "-",   "*",   "/",   "%",   "@",  "&",  "|",  "^",  "~",  "<",  ">",
    "(",   ")",   "[",   "]",   "{",   "}",  ",",  ":",  ";",  ".",  "=",  "<>"};

class Lexer {
 public:
  Lexer(std::string_view text, const LineIndex& lines) : text_(text), lines_(lines) {
    if (text_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
  }

  // Expression mode: tokenizes text[begin, end) as if inside brackets.
  Lexer(std::string_view text, const LineIndex& lines, std::size_t begin, std::size_t end)
      : text_(text.substr(0, end)), lines_(lines), pos_(begin), expression_mode_(true) {}

  LexResult run() {
    bool at_line_start = !expression_mode_;
    while (true) {
      if (at_line_start && depth_.empty()) {
        if (!handle_indentation()) break;
        at_line_start = false;
        continue;
      }
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\f' || c == '\r') {
        ++pos_;
        continue;
      }
      if (c == '#') {
        read_comment();
        continue;
      }
      if (c == '\\') {
        std::size_t next = pos_ + 1;
        if (next < text_.size() && text_[next] == '\r') ++next;
        if (next < text_.size() && text_[next] == '\n') {
          pos_ = next + 1;
          continue;
        }
        if (next >= text_.size()) throw SyntaxError(pos_, "unexpected end of file after line continuation");
        throw SyntaxError(pos_, "unexpected character after line continuation");
      }
      if (c == '\n') {
        if (depth_.empty() && !expression_mode_) {
          emit(TokenKind::Newline, pos_, pos_ + 1);
          at_line_start = true;
        }
        ++pos_;
        continue;
      }
      if (is_ident_start(static_cast<unsigned char>(c))) {
        read_name_or_string();
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) ||
          (c == '.' && pos_ + 1 < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
        read_number();
        continue;
      }
      if (c == '"' || c == '\'') {
        read_string(pos_, pos_, false);
        continue;
      }
      read_operator();
    }
    if (!depth_.empty()) {
      throw SyntaxError(depth_.back(), std::string("'") + text_[depth_.back()] + "' was never closed");
    }
    if (expression_mode_) {
      emit(TokenKind::End, text_.size(), text_.size());
      return std::move(out_);
    }
    if (!out_.tokens.empty() && out_.tokens.back().kind != TokenKind::Newline &&
        out_.tokens.back().kind != TokenKind::Dedent && out_.tokens.back().kind != TokenKind::Indent) {
      emit(TokenKind::Newline, text_.size(), text_.size());
    }
    while (indents_.size() > 1) {
      indents_.pop_back();
      emit(TokenKind::Dedent, text_.size(), text_.size());
    }
    emit(TokenKind::End, text_.size(), text_.size());
    return std::move(out_);
  }

 private:
  // Consumes leading whitespace of a logical line; skips blank and
  // comment-only lines. Returns false at end of input.
  bool handle_indentation() {
    while (pos_ < text_.size()) {
      int column = 0;
      std::size_t p = pos_;
      while (p < text_.size()) {
        char c = text_[p];
        if (c == ' ') {
          ++column;
        } else if (c == '\t') {
          column = (column / 8 + 1) * 8;
        } else if (c == '\f') {
          column = 0;
        } else {
          break;
        }
        ++p;
      }
      if (p >= text_.size()) {
        pos_ = p;
        return false;
      }
      char c = text_[p];
      if (c == '#' || c == '\n' || c == '\r' || c == '\\') {
        pos_ = p;
        if (c == '#') read_comment();
        if (pos_ < text_.size() && text_[pos_] == '\r') ++pos_;
        if (c == '\\') {
          // A continuation at the start of a line joins with the next one.
          return true;
        }
        if (pos_ < text_.size() && text_[pos_] == '\n') ++pos_;
        continue;
      }
      pos_ = p;
      if (column > indents_.back()) {
        indents_.push_back(column);
        emit(TokenKind::Indent, pos_, pos_);
      } else {
        while (column < indents_.back()) {
          indents_.pop_back();
          emit(TokenKind::Dedent, pos_, pos_);
        }
        if (column != indents_.back()) {
          throw SyntaxError(pos_, "unindent does not match any outer indentation level");
        }
      }
      return true;
    }
    return false;
  }

  void read_comment() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
    std::size_t end = pos_;
    if (end > start && text_[end - 1] == '\r') --end;
    Position p = lines_.position(start);
    out_.comments.push_back(Comment{p.line, p.col, std::string(text_.substr(start, end - start))});
  }

  void read_name_or_string() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view word = text_.substr(start, pos_ - start);
    if (pos_ < text_.size() && (text_[pos_] == '"' || text_[pos_] == '\'') && is_string_prefix(word)) {
      bool formatted = std::any_of(word.begin(), word.end(), [](char c) { return c == 'f' || c == 'F'; });
      bool raw = std::any_of(word.begin(), word.end(), [](char c) { return c == 'r' || c == 'R'; });
      read_string(start, pos_, formatted);
      out_.tokens.back().raw = raw;
      return;
    }
    emit(TokenKind::Name, start, pos_);
  }

  void read_string(std::size_t start, std::size_t quote_pos, bool formatted) {
    char q = text_[quote_pos];
    bool triple = text_.substr(quote_pos, 3) == std::string(3, q);
    std::size_t body_start = quote_pos + (triple ? 3 : 1);
    std::size_t p = body_start;
    while (true) {
      if (p >= text_.size()) {
        throw SyntaxError(start, triple ? "unterminated triple-quoted string literal"
                                        : "unterminated string literal");
      }
      char c = text_[p];
      if (c == '\\') {
        p += 2;
        continue;
      }
      if (!triple && c == '\n') throw SyntaxError(start, "unterminated string literal");
      if (c == q) {
        if (!triple) break;
        if (text_.substr(p, 3) == std::string(3, q)) break;
      }
      ++p;
    }
    std::size_t body_end = p;
    pos_ = p + (triple ? 3 : 1);
    Token& t = emit(TokenKind::String, start, pos_);
    t.formatted = formatted;
    t.body = {body_start, body_end};
  }

  void read_number() {
    std::size_t start = pos_;
    auto digits = [&](auto pred) {
      while (pos_ < text_.size() && (pred(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    };
    auto dec = [](unsigned char c) { return std::isdigit(c) != 0; };
    if (text_[pos_] == '0' && pos_ + 1 < text_.size() &&
        std::strchr("xXoObB", text_[pos_ + 1]) != nullptr) {
      pos_ += 2;
      digits([](unsigned char c) { return std::isxdigit(c) != 0; });
    } else {
      digits(dec);
      if (pos_ < text_.size() && text_[pos_] == '.') {
        ++pos_;
        digits(dec);
      }
      if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
        std::size_t save = pos_;
        ++pos_;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          digits(dec);
        } else {
          pos_ = save;
        }
      }
      if (pos_ < text_.size() && (text_[pos_] == 'j' || text_[pos_] == 'J')) ++pos_;
    }
    if (pos_ < text_.size() && is_ident_start(static_cast<unsigned char>(text_[pos_]))) {
      throw SyntaxError(start, "invalid decimal literal");
    }
    emit(TokenKind::Number, start, pos_);
  }

  void read_operator() {
    for (std::string_view op : kOperators) {
      if (op == "<>") continue;
      if (text_.substr(pos_, op.size()) == op) {
        std::size_t start = pos_;
        pos_ += op.size();
        char c = op[0];
        if (op.size() == 1 && (c == '(' || c == '[' || c == '{')) {
          depth_.push_back(start);
        } else if (op.size() == 1 && (c == ')' || c == ']' || c == '}')) {
          if (depth_.empty()) throw SyntaxError(start, std::string("unmatched '") + c + "'");
          char open = text_[depth_.back()];
          bool ok = (open == '(' && c == ')') || (open == '[' && c == ']') || (open == '{' && c == '}');
          if (!ok) {
            throw SyntaxError(start, std::string("closing parenthesis '") + c +
                                         "' does not match opening parenthesis '" + open + "'");
          }
          depth_.pop_back();
        }
        emit(TokenKind::Op, start, pos_);
        return;
      }
    }
    throw SyntaxError(pos_, std::string("invalid character '") + text_[pos_] + "'");
  }

  Token& emit(TokenKind kind, std::size_t begin, std::size_t end) {
    Token& t = out_.tokens.emplace_back();
    t.kind = kind;
    t.range = {begin, end};
    t.text = text_.substr(begin, end - begin);
    return t;
  }

  std::string_view text_;
  const LineIndex& lines_;
  std::size_t pos_ = 0;
  bool expression_mode_ = false;
  std::vector<int> indents_{0};
  std::vector<std::size_t> depth_;
  LexResult out_;
};

}  // namespace

LexResult tokenize(std::string_view text, const LineIndex& lines) {
  return Lexer(text, lines).run();
}

LexResult tokenize_expression(std::string_view text, const LineIndex& lines, std::size_t begin,
                              std::size_t end) {
  return Lexer(text, lines, begin, end).run();
}

}  // namespace dlperf::detail
