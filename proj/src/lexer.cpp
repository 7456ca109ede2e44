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

#include "eb2dbc/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

namespace eb2dbc {
namespace {

constexpr std::array<std::string_view, 25> kKeywords = {
    "machine", "sees",   "variables", "invariants", "events", "event",
    "any",     "where",  "then",      "end",        "context", "constants",
    "sets",    "axioms", "or",        "not",        "div",     "mod",
    "NAT",     "INT",    "BOOL",      "POW",        "TRUE",    "FALSE",
    "refines",
};

// Longest first so that e.g. "<=>" wins over "<=".
constexpr std::array<std::string_view, 24> kOperators = {
    "<=>", ":=", "::", ":|", "<:", "/=", "<=", ">=", "=>", "\\/", "/\\",
    ":",   "<",  ">",  "=",  "&",  "\\", "+",  "-",  "*",  "{",  "}",
    "(",   ")",
};

// Unicode spellings used by Rodin, mapped to the ASCII surface form.
struct UnicodeAlias {
  std::string_view utf8;
  std::string_view ascii;
  TokenKind kind;
};

const std::array<UnicodeAlias, 21> kUnicode = {{
    {"∈", ":", TokenKind::Operator},
    {"⊆", "<:", TokenKind::Operator},
    {"≠", "/=", TokenKind::Operator},
    {"≤", "<=", TokenKind::Operator},
    {"≥", ">=", TokenKind::Operator},
    {"∧", "&", TokenKind::Operator},
    {"∨", "or", TokenKind::Keyword},
    {"¬", "not", TokenKind::Keyword},
    {"⇒", "=>", TokenKind::Operator},
    {"⇔", "<=>", TokenKind::Operator},
    {"∪", "\\/", TokenKind::Operator},
    {"∩", "/\\", TokenKind::Operator},
    {"∖", "\\", TokenKind::Operator},
    {"ℕ", "NAT", TokenKind::Keyword},
    {"ℤ", "INT", TokenKind::Keyword},
    {"ℙ", "POW", TokenKind::Keyword},
    {"≔", ":=", TokenKind::Operator},
    {"∗", "*", TokenKind::Operator},
    {"÷", "div", TokenKind::Keyword},
    {"−", "-", TokenKind::Operator},
    {"∣", ":|", TokenKind::Operator},
}};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (skip_trivia(), i_ < src_.size()) {
      const int line = line_, col = col_;
      const char c = src_[i_];
      Token tok;
      tok.line = line;
      tok.column = col;

      if (ident_start(c)) {
        const std::size_t start = i_;
        while (i_ < src_.size() && ident_char(src_[i_])) advance(1);
        tok.lexeme = std::string(src_.substr(start, i_ - start));
        tok.spelling = tok.lexeme;
        tok.kind = is_keyword(tok.lexeme) ? TokenKind::Keyword
                                          : TokenKind::Identifier;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        const std::size_t start = i_;
        while (i_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[i_])))
          advance(1);
        tok.lexeme = std::string(src_.substr(start, i_ - start));
        tok.spelling = tok.lexeme;
        tok.kind = TokenKind::IntegerLiteral;
      } else if (c == '@') {
        advance(1);
        tok.lexeme = tok.spelling = "@";
        tok.kind = TokenKind::LabelMarker;
      } else if (c == ',') {
        advance(1);
        tok.lexeme = tok.spelling = ",";
        tok.kind = TokenKind::Punctuation;
      } else if (match_unicode(tok)) {
        // Rodin spells the non-deterministic assignments ":∈" and ":∣".
        if ((tok.spelling == ":" || tok.spelling == ":|") && !out.empty() &&
            out.back().spelling == ":" && out.back().line == line &&
            out.back().column == col - 1) {
          out.back().lexeme += tok.lexeme;
          out.back().spelling = tok.spelling == ":" ? "::" : ":|";
          continue;
        }
        if (tok.spelling == "{" || tok.spelling == "}")
          tok.kind = TokenKind::Punctuation;
      } else if (!match_operator(tok)) {
        throw Error(ErrorKind::Lex,
                    std::string("illegal character '") + printable(c) + "'",
                    {line, col});
      }
      out.push_back(std::move(tok));
    }
    return out;
  }

 private:
  static std::string printable(char c) {
    if (static_cast<unsigned char>(c) < 0x20 || c == 0x7f) {
      static const char* hex = "0123456789abcdef";
      const auto u = static_cast<unsigned char>(c);
      return std::string("\\x") + hex[u >> 4] + hex[u & 0xf];
    }
    return std::string(1, c);
  }

  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n && i_ < src_.size(); ++k) {
      const auto u = static_cast<unsigned char>(src_[i_]);
      if (src_[i_] == '\n') {
        ++line_;
        col_ = 1;
      } else if ((u & 0xc0) != 0x80) {
        // Columns count code points, not UTF-8 continuation bytes.
        ++col_;
      }
      ++i_;
    }
  }

  void skip_trivia() {
    while (i_ < src_.size()) {
      const char c = src_[i_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance(1);
      } else if (src_.substr(i_, 2) == "//") {
        while (i_ < src_.size() && src_[i_] != '\n') advance(1);
      } else if (src_.substr(i_, 2) == "/*") {
        const int line = line_, col = col_;
        const auto close = src_.find("*/", i_ + 2);
        if (close == std::string_view::npos)
          throw Error(ErrorKind::Lex, "unterminated comment", {line, col});
        advance(close + 2 - i_);
      } else {
        return;
      }
    }
  }

  bool match_operator(Token& tok) {
    for (auto op : kOperators) {
      if (src_.substr(i_, op.size()) == op) {
        advance(op.size());
        tok.lexeme = tok.spelling = std::string(op);
        tok.kind = (op == "{" || op == "}" || op == "(" || op == ")")
                       ? TokenKind::Punctuation
                       : TokenKind::Operator;
        return true;
      }
    }
    return false;
  }

  bool match_unicode(Token& tok) {
    if (static_cast<unsigned char>(src_[i_]) < 0x80) return false;
    for (const auto& alias : kUnicode) {
      if (src_.substr(i_, alias.utf8.size()) == alias.utf8) {
        advance(alias.utf8.size());
        tok.lexeme = std::string(alias.utf8);
        tok.spelling = std::string(alias.ascii);
        tok.kind = alias.kind;
        return true;
      }
    }
    // ∅ becomes a single "{}" token; the parser accepts both spellings.
    static constexpr std::string_view kEmpty = "∅";
    if (src_.substr(i_, kEmpty.size()) == kEmpty) {
      advance(kEmpty.size());
      tok.lexeme = std::string(kEmpty);
      tok.spelling = "{}";
      tok.kind = TokenKind::Punctuation;
      return true;
    }
    return false;
  }

  std::string_view src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> lex(std::string_view source) {
  return Lexer(source).run();
}

}  // namespace eb2dbc
