// Copyright 2026 The eb2dbc Authors
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

#ifndef EB2DBC_LEXER_HPP_
#define EB2DBC_LEXER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "eb2dbc/error.hpp"

namespace eb2dbc {

enum class TokenKind {
  Keyword,
  Identifier,
  IntegerLiteral,
  Operator,
  LabelMarker,
  Punctuation,
};

/// A lexeme of the ASCII surface syntax. Unicode mathematical symbols as
/// found in Rodin exports (∈, ⊆, ≔, ℕ, ...) are accepted too; `lexeme`
/// keeps the source spelling while `spelling` holds the ASCII form the
/// parser matches on.
struct Token {
  TokenKind kind = TokenKind::Identifier;
  std::string lexeme;
  std::string spelling;
  int line = 1;
  int column = 1;

  SourcePos pos() const { return {line, column}; }
  bool is(TokenKind k, std::string_view s) const {
    return kind == k && spelling == s;
  }
};

/// Splits `source` into tokens. `//` comments and whitespace are dropped.
/// Throws Error(ErrorKind::Lex) on an illegal character.
std::vector<Token> lex(std::string_view source);

bool is_keyword(std::string_view word);

}  // namespace eb2dbc

#endif  // EB2DBC_LEXER_HPP_
