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

#ifndef EB2DBC_AST_HPP_
#define EB2DBC_AST_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eb2dbc/error.hpp"

namespace eb2dbc {

enum class ExprKind {
  IntLit,
  BoolLit,
  Ident,
  Unary,
  Binary,
  SetEnum,   // {e1, ..., ek}, k >= 1
  EmptySet,  // {}
  TypeInt,   // INT
  TypeNat,   // NAT
  TypeBool,  // BOOL
  TypePow,   // POW(inner)
};

enum class UnaryOp { Neg, Not };

enum class BinaryOp {
  Add, Sub, Mul, Div, Mod,
  Eq, Neq, Lt, Le, Gt, Ge,
  In, Subset,
  Union, Inter, Diff,
  And, Or, Implies, Equiv,
};

const char* op_spelling(UnaryOp op);
const char* op_spelling(BinaryOp op);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression/predicate node shared by every stage. Carrier-set
/// names are plain identifiers here; the symbol table says which ones are
/// type atoms.
struct Expr {
  ExprKind kind = ExprKind::IntLit;
  UnaryOp unary = UnaryOp::Neg;
  BinaryOp binary = BinaryOp::Add;
  std::int64_t int_value = 0;
  bool bool_value = false;
  std::string name;
  std::vector<ExprPtr> children;
  SourcePos pos;

  static ExprPtr int_lit(std::int64_t v, SourcePos p = {});
  static ExprPtr bool_lit(bool v, SourcePos p = {});
  static ExprPtr ident(std::string n, SourcePos p = {});
  static ExprPtr unary_of(UnaryOp op, ExprPtr e, SourcePos p = {});
  static ExprPtr binary_of(BinaryOp op, ExprPtr l, ExprPtr r, SourcePos p = {});
  static ExprPtr set_enum(std::vector<ExprPtr> elems, SourcePos p = {});
  static ExprPtr empty_set(SourcePos p = {});
  static ExprPtr type_atom(ExprKind k, SourcePos p = {});
  static ExprPtr pow(ExprPtr inner, SourcePos p = {});

  const Expr& lhs() const { return *children.at(0); }
  const Expr& rhs() const { return *children.at(1); }
  bool is_binary(BinaryOp op) const {
    return kind == ExprKind::Binary && binary == op;
  }
};

/// Structural equality; source positions are ignored.
bool same_structure(const Expr& a, const Expr& b);

/// Pre-order walk.
void visit(const Expr& e, const std::function<void(const Expr&)>& fn);

/// Identifiers occurring in `e`, in first-occurrence order.
std::vector<std::string> identifiers_of(const Expr& e);

/// Splits a predicate on top-level `&`.
std::vector<const Expr*> conjuncts(const Expr& e);

struct LabeledPredicate {
  std::string label;
  ExprPtr predicate;
  SourcePos pos;
};

struct LabeledAction {
  std::string label;
  std::string target;
  ExprPtr rhs;
  SourcePos pos;
};

struct EventAst {
  std::string name;
  std::vector<std::string> params;
  std::vector<LabeledPredicate> guards;
  std::vector<LabeledAction> actions;
  SourcePos pos;
};

struct MachineAst {
  std::string name;
  std::vector<std::string> sees;
  std::vector<std::string> variables;
  std::vector<LabeledPredicate> invariants;
  EventAst initialisation;
  std::vector<EventAst> events;
  /// Where the machine came from (a path, or empty); used for diagnostics.
  std::string source;
  SourcePos pos;
};

struct ContextAst {
  std::string name;
  std::vector<std::string> constants;
  std::vector<std::string> sets;
  std::vector<LabeledPredicate> axioms;
  std::string source;
  SourcePos pos;
};

enum class SymbolKind { Variable, Constant, CarrierSet, Parameter };

const char* symbol_kind_name(SymbolKind kind);

struct Symbol {
  std::string name;
  SymbolKind kind = SymbolKind::Variable;
  /// Machine or context declaring the symbol; for parameters, the event.
  std::string owner;
  SourcePos pos;
};

/// Global names (variables, constants, carrier sets) plus per-event
/// parameter scopes. Parameters of different events may share a name.
class SymbolTable {
 public:
  void add_global(Symbol s) { globals_.emplace(s.name, std::move(s)); }
  void add_param(const std::string& event, Symbol s) {
    params_[event].emplace(s.name, std::move(s));
  }

  /// Parameters shadow nothing: linking rejects a parameter that collides
  /// with a global, so lookup order only matters for failed lookups.
  const Symbol* lookup(const std::string& name,
                       const std::string* event = nullptr) const;
  const Symbol* global(const std::string& name) const;

  const std::map<std::string, Symbol>& globals() const { return globals_; }
  const std::map<std::string, std::map<std::string, Symbol>>& params() const {
    return params_;
  }

 private:
  std::map<std::string, Symbol> globals_;
  std::map<std::string, std::map<std::string, Symbol>> params_;
};

struct EventBModel {
  MachineAst machine;
  std::vector<ContextAst> contexts;  // in `sees` order
  SymbolTable symbols;

  bool is_carrier_set(const std::string& name) const {
    const Symbol* s = symbols.global(name);
    return s && s->kind == SymbolKind::CarrierSet;
  }
  bool is_variable(const std::string& name) const {
    const Symbol* s = symbols.global(name);
    return s && s->kind == SymbolKind::Variable;
  }
  bool is_constant(const std::string& name) const {
    const Symbol* s = symbols.global(name);
    return s && s->kind == SymbolKind::Constant;
  }
  /// All constants across contexts, in declaration order.
  std::vector<std::string> constants() const;
  std::vector<std::string> carrier_sets() const;
  /// Source unit (file or name) of the given context, or the machine's.
  std::string unit_of_context(const std::string& context) const;
};

bool same_structure(const MachineAst& a, const MachineAst& b);
bool same_structure(const ContextAst& a, const ContextAst& b);
bool same_structure(const EventBModel& a, const EventBModel& b);

/// Event names are matched case-insensitively against INITIALISATION.
bool is_initialisation_name(const std::string& name);

}  // namespace eb2dbc

#endif  // EB2DBC_AST_HPP_
