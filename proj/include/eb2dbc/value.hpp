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

#ifndef EB2DBC_VALUE_HPP_
#define EB2DBC_VALUE_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace eb2dbc {

/// Int | Bool | Atom(carrier, index) | Set(finite, sorted, duplicate-free).
class Value {
 public:
  enum class Kind { Int, Bool, Atom, Set };

  Value() = default;
  static Value integer(std::int64_t v);
  static Value boolean(bool v);
  static Value atom(std::string carrier, int index);
  /// Sorts and removes duplicates.
  static Value set(std::vector<Value> elems);

  Kind kind() const { return kind_; }
  std::int64_t as_int() const;
  bool as_bool() const;
  const std::string& carrier() const { return carrier_; }
  int atom_index() const { return static_cast<int>(int_); }
  const std::vector<Value>& elements() const;

  bool contains(const Value& v) const;
  bool is_subset_of(const Value& other) const;
  Value set_union(const Value& other) const;
  Value set_intersection(const Value& other) const;
  Value set_difference(const Value& other) const;

  /// `3`, `TRUE`, `S#0`, `{1, 2}`. Use Interpretation::format for atom names.
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  Kind kind_ = Kind::Int;
  std::int64_t int_ = 0;  // Int value, Bool as 0/1, or atom index
  std::string carrier_;
  std::vector<Value> elems_;
};

/// Total assignment of machine variables.
struct SimState {
  std::map<std::string, Value> vars;

  const Value& at(const std::string& name) const;
  /// `n=0, r={1, 2}` in variable-name order.
  std::string to_string() const;

  friend auto operator<=>(const SimState&, const SimState&) = default;
  friend bool operator==(const SimState&, const SimState&) = default;
};

using Args = std::map<std::string, Value>;

/// Finite scope for concrete checking: constant values, named elements of
/// each carrier set, and the bound B for integer parameters in [-B, B].
struct Interpretation {
  std::map<std::string, Value> constants;
  std::map<std::string, std::vector<std::string>> carriers;
  int param_bound = 5;

  int carrier_size(const std::string& set) const;
  /// Like Value::to_string but prints atoms by element name.
  std::string format(const Value& v) const;
  std::string format(const SimState& s) const;
};

}  // namespace eb2dbc

#endif  // EB2DBC_VALUE_HPP_
