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

#include "eb2dbc/value.hpp"

#include <algorithm>
#include <iterator>

#include "eb2dbc/error.hpp"

namespace eb2dbc {

Value Value::integer(std::int64_t v) {
  Value r;
  r.kind_ = Kind::Int;
  r.int_ = v;
  return r;
}

Value Value::boolean(bool v) {
  Value r;
  r.kind_ = Kind::Bool;
  r.int_ = v ? 1 : 0;
  return r;
}

Value Value::atom(std::string carrier, int index) {
  Value r;
  r.kind_ = Kind::Atom;
  r.carrier_ = std::move(carrier);
  r.int_ = index;
  return r;
}

Value Value::set(std::vector<Value> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  Value r;
  r.kind_ = Kind::Set;
  r.elems_ = std::move(elems);
  return r;
}

namespace {
[[noreturn]] void wrong_kind(const char* want, const Value& got) {
  throw Error(ErrorKind::Eval,
              std::string("expected ") + want + ", found " + got.to_string());
}
}  // namespace

std::int64_t Value::as_int() const {
  if (kind_ != Kind::Int) wrong_kind("an integer", *this);
  return int_;
}

bool Value::as_bool() const {
  if (kind_ != Kind::Bool) wrong_kind("a boolean", *this);
  return int_ != 0;
}

const std::vector<Value>& Value::elements() const {
  if (kind_ != Kind::Set) wrong_kind("a set", *this);
  return elems_;
}

bool Value::contains(const Value& v) const {
  const auto& e = elements();
  return std::binary_search(e.begin(), e.end(), v);
}

bool Value::is_subset_of(const Value& other) const {
  const auto& a = elements();
  const auto& b = other.elements();
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Value Value::set_union(const Value& other) const {
  std::vector<Value> out;
  std::set_union(elements().begin(), elements().end(),
                 other.elements().begin(), other.elements().end(),
                 std::back_inserter(out));
  return set(std::move(out));
}

Value Value::set_intersection(const Value& other) const {
  std::vector<Value> out;
  std::set_intersection(elements().begin(), elements().end(),
                        other.elements().begin(), other.elements().end(),
                        std::back_inserter(out));
  return set(std::move(out));
}

Value Value::set_difference(const Value& other) const {
  std::vector<Value> out;
  std::set_difference(elements().begin(), elements().end(),
                      other.elements().begin(), other.elements().end(),
                      std::back_inserter(out));
  return set(std::move(out));
}

std::string Value::to_string() const {
  switch (kind_) {
    case Kind::Int: return std::to_string(int_);
    case Kind::Bool: return int_ ? "TRUE" : "FALSE";
    case Kind::Atom: return carrier_ + "#" + std::to_string(int_);
    case Kind::Set: {
      std::string out = "{";
      for (std::size_t i = 0; i < elems_.size(); ++i)
        out += (i ? ", " : "") + elems_[i].to_string();
      return out + "}";
    }
  }
  return "?";
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  switch (a.kind_) {
    case Value::Kind::Int:
    case Value::Kind::Bool:
      return a.int_ <=> b.int_;
    case Value::Kind::Atom:
      if (auto c = a.carrier_ <=> b.carrier_; c != 0) return c;
      return a.int_ <=> b.int_;
    case Value::Kind::Set:
      return std::lexicographical_compare_three_way(
          a.elems_.begin(), a.elems_.end(), b.elems_.begin(), b.elems_.end());
  }
  return std::strong_ordering::equal;
}

const Value& SimState::at(const std::string& name) const {
  auto it = vars.find(name);
  if (it == vars.end())
    throw Error(ErrorKind::Eval, "state has no variable '" + name + "'")
        .with_subject(name);
  return it->second;
}

std::string SimState::to_string() const {
  std::string out;
  for (const auto& [k, v] : vars) {
    if (!out.empty()) out += ", ";
    out += k + "=" + v.to_string();
  }
  return out;
}

int Interpretation::carrier_size(const std::string& set) const {
  auto it = carriers.find(set);
  return it == carriers.end() ? 0 : static_cast<int>(it->second.size());
}

std::string Interpretation::format(const Value& v) const {
  switch (v.kind()) {
    case Value::Kind::Atom: {
      auto it = carriers.find(v.carrier());
      if (it != carriers.end() && v.atom_index() >= 0 &&
          v.atom_index() < static_cast<int>(it->second.size()))
        return it->second[v.atom_index()];
      return v.to_string();
    }
    case Value::Kind::Set: {
      std::string out = "{";
      const auto& e = v.elements();
      for (std::size_t i = 0; i < e.size(); ++i)
        out += (i ? ", " : "") + format(e[i]);
      return out + "}";
    }
    default:
      return v.to_string();
  }
}

std::string Interpretation::format(const SimState& s) const {
  std::string out;
  for (const auto& [k, v] : s.vars) {
    if (!out.empty()) out += ", ";
    out += k + "=" + format(v);
  }
  return out;
}

}  // namespace eb2dbc
