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

#ifndef EB2DBC_BINDINGS_HPP_
#define EB2DBC_BINDINGS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "eb2dbc/error.hpp"

namespace eb2dbc {

/// Right-hand side of one `key=value` line, before typing.
struct BindingLiteral {
  enum class Kind { Int, Bool, Name, Enum };

  Kind kind = Kind::Int;
  std::int64_t int_value = 0;
  bool bool_value = false;
  std::string name;                    // element name for Kind::Name
  std::vector<BindingLiteral> elems;   // for Kind::Enum

  std::string to_string() const;
};

/// Parsed constants-binding file:
///
///   # comment
///   d=2
///   flag=true
///   COLOUR={red, green, blue}   carrier set: its named elements
///   PLACE=4                     carrier set: four elements PLACE1..PLACE4
///   k=red                       constant holding a carrier element
///   r0={red, blue}              set-valued constant
struct ConstantBindings {
  struct Entry {
    BindingLiteral value;
    int line = 0;
  };
  std::map<std::string, Entry> entries;
  std::string unit;

  bool has(const std::string& key) const { return entries.count(key) != 0; }
  const Entry* find(const std::string& key) const {
    auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  }
};

/// One value in binding syntax: `3`, `true`, `red`, `{1, 2}`.
/// Errors: BadBinding.
BindingLiteral parse_literal(std::string_view text, int line = 1,
                             const std::string& unit = {});

/// Throws BadBinding with the line on malformed input or a repeated key.
ConstantBindings parse_bindings(std::string_view text,
                                const std::string& unit = {});

}  // namespace eb2dbc

#endif  // EB2DBC_BINDINGS_HPP_
