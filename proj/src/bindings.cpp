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

#include "eb2dbc/bindings.hpp"

#include <cctype>
#include <charconv>

namespace eb2dbc {

std::string BindingLiteral::to_string() const {
  switch (kind) {
    case Kind::Int: return std::to_string(int_value);
    case Kind::Bool: return bool_value ? "true" : "false";
    case Kind::Name: return name;
    case Kind::Enum: {
      std::string out = "{";
      for (std::size_t i = 0; i < elems.size(); ++i)
        out += (i ? "," : "") + elems[i].to_string();
      return out + "}";
    }
  }
  return {};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool is_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

class LiteralParser {
 public:
  LiteralParser(std::string_view text, int line, const std::string& unit)
      : s_(text), line_(line), unit_(unit) {}

  BindingLiteral run() {
    auto v = value();
    skip_ws();
    if (i_ != s_.size()) fail("trailing characters");
    return v;
  }

 private:
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
  }

  BindingLiteral value() {
    skip_ws();
    BindingLiteral lit;
    if (i_ < s_.size() && s_[i_] == '{') {
      ++i_;
      lit.kind = BindingLiteral::Kind::Enum;
      skip_ws();
      if (i_ < s_.size() && s_[i_] == '}') {
        ++i_;
        return lit;
      }
      for (;;) {
        lit.elems.push_back(value());
        skip_ws();
        if (i_ < s_.size() && s_[i_] == ',') {
          ++i_;
          continue;
        }
        if (i_ < s_.size() && s_[i_] == '}') {
          ++i_;
          return lit;
        }
        fail("expected ',' or '}'");
      }
    }
    const std::size_t start = i_;
    while (i_ < s_.size() && s_[i_] != ',' && s_[i_] != '}' &&
           !std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
    const std::string_view word = s_.substr(start, i_ - start);
    if (word.empty()) fail("missing value");
    if (word == "true" || word == "TRUE" || word == "false" || word == "FALSE") {
      lit.kind = BindingLiteral::Kind::Bool;
      lit.bool_value = word == "true" || word == "TRUE";
      return lit;
    }
    if (is_name(word)) {
      lit.kind = BindingLiteral::Kind::Name;
      lit.name = std::string(word);
      return lit;
    }
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc() || ptr != word.data() + word.size())
      fail("'" + std::string(word) + "' is not an integer, boolean, or name");
    lit.kind = BindingLiteral::Kind::Int;
    lit.int_value = v;
    return lit;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorKind::BadBinding, msg,
                {line_, static_cast<int>(i_) + 1}, unit_);
  }

  std::string_view s_;
  std::size_t i_ = 0;
  int line_;
  const std::string& unit_;
};

}  // namespace

BindingLiteral parse_literal(std::string_view text, int line,
                             const std::string& unit) {
  return LiteralParser(text, line, unit).run();
}

ConstantBindings parse_bindings(std::string_view text, const std::string& unit) {
  ConstantBindings out;
  out.unit = unit;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorKind::BadBinding, "expected key=value", {line_no, 1},
                  unit);
    const std::string key(trim(line.substr(0, eq)));
    if (!is_name(key))
      throw Error(ErrorKind::BadBinding, "'" + key + "' is not an identifier",
                  {line_no, 1}, unit);
    ConstantBindings::Entry entry;
    entry.line = line_no;
    entry.value = LiteralParser(line.substr(eq + 1), line_no, unit).run();
    if (!out.entries.emplace(key, std::move(entry)).second)
      throw Error(ErrorKind::BadBinding, "'" + key + "' is bound twice",
                  {line_no, 1}, unit)
          .with_subject(key);
  }
  return out;
}

}  // namespace eb2dbc
