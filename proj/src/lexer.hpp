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

#ifndef DLPERF_SRC_LEXER_HPP_
#define DLPERF_SRC_LEXER_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dlperf/source.hpp"

namespace dlperf::detail {

enum class TokenKind { Name, Number, String, Op, Newline, Indent, Dedent, End };

struct Token {
  TokenKind kind = TokenKind::End;
  ByteRange range;
  std::string_view text;
  /// String tokens only: true for f-strings / raw strings.
  bool formatted = false;
  bool raw = false;
  /// String tokens only: byte range of the literal body between the quotes.
  ByteRange body;
};

/// Lexical or syntactic failure at a byte offset.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct LexResult {
  std::vector<Token> tokens;
  std::vector<Comment> comments;
};

/// Tokenizes a whole file. Emits INDENT/DEDENT/NEWLINE like CPython's
/// tokenizer and drops blank lines, comments and continuation lines.
LexResult tokenize(std::string_view text, const LineIndex& lines);

/// Tokenizes text[begin, end) as a bracketed expression (used for the
/// replacement fields of f-strings). Offsets stay absolute.
LexResult tokenize_expression(std::string_view text, const LineIndex& lines, std::size_t begin,
                              std::size_t end);

}  // namespace dlperf::detail

#endif  // DLPERF_SRC_LEXER_HPP_
