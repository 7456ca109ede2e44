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

#ifndef EB2DBC_EIFFEL_HPP_
#define EB2DBC_EIFFEL_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace eb2dbc {

enum class EKind {
  IntLit,
  BoolLit,
  Attribute,   // machine variable, e.g. `n`
  Constant,    // `ctx.d`, or `d` when unqualified
  Argument,    // event parameter
  Local,       // body temporary, e.g. `old_n`
  Cursor,      // `ic.item` inside an across
  Old,         // `old <child>`
  Unary,
  Binary,
  Call,        // `<receiver>.<name> (<args>)`
  SetLiteral,  // `create {EBSET [T]}.make_from_array (<<..>>)`
  Across,      // `across <domain> as <cursor> all <body> end`
};

enum class EUnOp { Neg, Not };

enum class EBinOp {
  Add, Sub, Mul, IntDiv, Mod,
  Eq, Neq, Lt, Le, Gt, Ge,
  And, Or, Implies,
};

struct EExpr;
using EExprPtr = std::shared_ptr<const EExpr>;

/// Pre-render target expression. Nodes that read model state keep the
/// Event-B name in `source` so the tree can be evaluated directly.
struct EExpr {
  EKind kind = EKind::IntLit;
  std::int64_t int_value = 0;
  bool bool_value = false;
  std::string name;    // target spelling: feature, argument, local, cursor
  std::string source;  // Event-B identifier, where one exists
  bool qualified = false;  // Constant: prefix with `ctx.`
  EUnOp unop = EUnOp::Neg;
  EBinOp binop = EBinOp::Add;
  std::string elem_type;  // SetLiteral element type text
  /// Call: receiver then arguments. Across: domain then body. Old, Unary:
  /// the operand. Binary: left, right. SetLiteral: elements.
  std::vector<EExprPtr> children;

  static EExprPtr int_lit(std::int64_t v);
  static EExprPtr bool_lit(bool v);
  static EExprPtr attribute(std::string name, std::string source);
  static EExprPtr constant(std::string name, std::string source, bool qualified);
  static EExprPtr argument(std::string name, std::string source);
  static EExprPtr local(std::string name, std::string source);
  static EExprPtr cursor(std::string name);
  static EExprPtr old(EExprPtr e);
  static EExprPtr unary(EUnOp op, EExprPtr e);
  static EExprPtr binary(EBinOp op, EExprPtr l, EExprPtr r);
  static EExprPtr call(EExprPtr receiver, std::string feature,
                       std::vector<EExprPtr> args = {});
  static EExprPtr set_literal(std::string elem_type, std::vector<EExprPtr> elems);
  static EExprPtr across(EExprPtr domain, std::string cursor, EExprPtr body);
};

const char* op_spelling(EBinOp op);

/// Minimal-parenthesis rendering.
std::string render_expr(const EExpr& e);

struct EStmt {
  enum class Kind {
    Assign,       // target := value
    AssignFrom,   // target.assign_from (value)
    CreateCtx,    // create ctx
    CreateEmpty,  // create target.make_empty
    Raw,          // fixed text, e.g. inside the runtime class
  };
  Kind kind = Kind::Raw;
  EExprPtr target;  // Attribute or Local
  EExprPtr value;
  std::string text;  // Raw; may span several lines

  static EStmt assign(EExprPtr target, EExprPtr value);
  static EStmt assign_from(EExprPtr target, EExprPtr value);
  static EStmt create_ctx();
  static EStmt create_empty(EExprPtr target);
  static EStmt raw(std::string text);
};

std::string render_stmt(const EStmt& s);

/// `tag: expression`. Runtime assertions carry fixed text instead of a tree.
struct Assertion {
  std::string tag;
  EExprPtr expr;
  std::string raw;
  std::string source_label;  // label it was translated from, if any

  std::string text() const;
};

struct Formal {
  std::string name;
  std::string type;
  std::string source;  // parameter or variable name it stands for
};

struct EiffelFeature {
  enum class Kind { Procedure, Function, Once, Attribute };

  Kind kind = Kind::Procedure;
  std::string name;
  std::vector<Formal> formals;
  std::string type;  // result type (Function, Once) or attribute type
  std::string comment;
  std::vector<Assertion> require;
  std::vector<Formal> locals;
  std::vector<EStmt> body;
  std::vector<Assertion> ensure;
  std::string source;  // event, variable or constant it translates

  bool is_once() const { return kind == Kind::Once; }
};

struct FeatureGroup {
  std::string comment;  // `feature -- <comment>`
  std::string clients;  // export list, e.g. "EBSET"; empty for ANY
  std::vector<EiffelFeature> features;
};

struct Parent {
  std::string type;
  std::vector<std::string> redefines;
};

struct EiffelUnit {
  std::string name;
  std::vector<std::string> generics;  // formal generic names, e.g. G
  std::vector<Parent> parents;
  std::vector<std::string> creators;
  std::vector<FeatureGroup> groups;
  std::vector<Assertion> invariants;
  std::string comment;  // optional note under the class header

  /// `m0.e`
  std::string file_name() const;
  const FeatureGroup* group(const std::string& comment) const;
  const EiffelFeature* feature(const std::string& name) const;
  std::size_t feature_count() const;
};

/// Deterministic text: lower-case keywords, two-space indentation, one
/// assertion clause per line, trailing newline.
std::string render(const EiffelUnit& unit);

/// Problems found in rendered text: unbalanced `end`, brackets or
/// parentheses, tabs, a missing trailing newline. Empty when well formed.
std::vector<std::string> check_rendered(const std::string& text);

/// Problems with the unit's own invariants: creators naming no feature,
/// duplicate tags within a contract section, duplicate feature names.
std::vector<std::string> check_unit(const EiffelUnit& unit);

/// Eiffel keywords; translated names colliding with one get a `_` suffix.
bool is_eiffel_reserved(const std::string& lower_name);

}  // namespace eb2dbc

#endif  // EB2DBC_EIFFEL_HPP_
