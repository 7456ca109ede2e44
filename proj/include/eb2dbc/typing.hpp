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

#ifndef EB2DBC_TYPING_HPP_
#define EB2DBC_TYPING_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "eb2dbc/ast.hpp"

namespace eb2dbc {

/// INT | BOOL | CARRIER(name) | SET_OF(elem). NAT is INT plus a pending
/// non-negativity constraint recorded in the TypeEnv.
class EbType {
 public:
  enum class Kind { Int, Bool, Carrier, Set };

  static EbType integer() { return EbType(Kind::Int); }
  static EbType boolean() { return EbType(Kind::Bool); }
  static EbType carrier(std::string set) {
    EbType t(Kind::Carrier);
    t.carrier_ = std::move(set);
    return t;
  }
  static EbType set_of(EbType elem) {
    EbType t(Kind::Set);
    t.elem_ = std::make_shared<const EbType>(std::move(elem));
    return t;
  }

  Kind kind() const { return kind_; }
  bool is_set() const { return kind_ == Kind::Set; }
  /// INTEGER and BOOLEAN are expanded (basic) types in the target; carrier
  /// elements and sets are reference (class) types.
  bool is_basic() const { return kind_ == Kind::Int || kind_ == Kind::Bool; }
  const std::string& carrier_name() const { return carrier_; }
  const EbType& element() const { return *elem_; }

  std::string to_string() const;

  friend bool operator==(const EbType& a, const EbType& b);
  friend bool operator!=(const EbType& a, const EbType& b) { return !(a == b); }

 private:
  explicit EbType(Kind k) : kind_(k) {}
  Kind kind_;
  std::string carrier_;
  std::shared_ptr<const EbType> elem_;
};

/// Identifies an entry of the environment. Globals have an empty event;
/// parameters are scoped by their event's name.
struct TypeKey {
  std::string event;
  std::string name;
  friend auto operator<=>(const TypeKey&, const TypeKey&) = default;
};

struct NatConstraint {
  std::string label;  // the clause that wrote `x : NAT`
  std::string unit;
  SourcePos pos;
};

class TypeEnv {
 public:
  struct Entry {
    EbType type;
    std::string origin;
  };

  void set(TypeKey key, EbType type, std::string origin) {
    entries_.insert_or_assign(std::move(key),
                              Entry{std::move(type), std::move(origin)});
  }
  /// Parameter scope first, then globals.
  const EbType* lookup(const std::string& name,
                       const std::string* event = nullptr) const;
  const EbType& at(const std::string& name,
                   const std::string* event = nullptr) const;
  const std::string* origin(const TypeKey& key) const;

  void add_nat(TypeKey key, NatConstraint c) {
    nat_.emplace(std::move(key), std::move(c));
  }
  const std::map<TypeKey, NatConstraint>& nat_constraints() const {
    return nat_;
  }
  bool has_nat(const TypeKey& key) const { return nat_.count(key) != 0; }

  const std::map<TypeKey, Entry>& entries() const { return entries_; }

  friend bool operator==(const TypeEnv& a, const TypeEnv& b);

 private:
  std::map<TypeKey, Entry> entries_;
  std::map<TypeKey, NatConstraint> nat_;
};

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string unit;
  SourcePos pos;
  std::string message;

  /// `error TYPE001 m0.ebm:3:5 message`
  std::string format() const;
};

struct TypeInference {
  std::optional<TypeEnv> env;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return env.has_value(); }
};

/// Harvests typing atoms (`x : INT`, `x : NAT`, `x : BOOL`, `x : S`,
/// `x : POW(T)`, `x <: T`) from the top-level conjuncts of every axiom,
/// invariant and guard, then propagates through arithmetic, comparison,
/// equality and set operators until nothing changes. Codes: TYPE001 (untyped
/// global), TYPE002 (conflicting constraints), TYPE003 (untyped parameter).
TypeInference infer_types(const EventBModel& model);

/// Empty iff every predicate is boolean, every action's right-hand side
/// matches its target, and every operator gets operands of the right type.
/// Codes: TYPE010 operand mismatch, TYPE011 action mismatch, TYPE012
/// non-boolean predicate, TYPE013 type expression used as a value.
std::vector<Diagnostic> check_wellformed(const EventBModel& model,
                                         const TypeEnv& env);

/// Types of every node of a well-typed expression, resolving `{}` from
/// context. `hint` is the type the surrounding construct expects (the
/// action target's type, or BOOL for predicates).
using ExprTypes = std::unordered_map<const Expr*, EbType>;
ExprTypes annotate_types(const Expr& e, const EventBModel& model,
                         const TypeEnv& env, const std::string* event,
                         const std::optional<EbType>& hint);

/// True for INT, NAT, BOOL, POW(..) and carrier-set names: expressions that
/// denote a type and may only appear on the right of `:` or `<:`.
bool is_type_expression(const Expr& e, const EventBModel& model);

/// Element type denoted by a type expression (NAT gives INT).
EbType denoted_type(const Expr& type_expr, const EventBModel& model);

}  // namespace eb2dbc

#endif  // EB2DBC_TYPING_HPP_
