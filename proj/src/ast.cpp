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

#include "eb2dbc/ast.hpp"

#include <algorithm>
#include <cctype>

namespace eb2dbc {

const char* error_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Lex: return "LEX001";
    case ErrorKind::Parse: return "PARSE001";
    case ErrorKind::MissingInitialisation: return "PARSE002";
    case ErrorKind::UnresolvedIdentifier: return "LINK001";
    case ErrorKind::MissingContext: return "LINK002";
    case ErrorKind::DuplicateDeclaration: return "LINK003";
    case ErrorKind::Xml: return "XML001";
    case ErrorKind::UnsupportedElement: return "XML002";
    case ErrorKind::Type: return "TYPE000";
    case ErrorKind::UnsupportedExpr: return "EMIT001";
    case ErrorKind::InitReadsState: return "EMIT002";
    case ErrorKind::MissingBinding: return "BIND001";
    case ErrorKind::BindingViolatesAxioms: return "BIND002";
    case ErrorKind::BadBinding: return "BIND003";
    case ErrorKind::Eval: return "EVAL001";
    case ErrorKind::NotEnabled: return "ANIM001";
    case ErrorKind::StateSpaceExceeded: return "ANIM002";
    case ErrorKind::UnsupportedParameter: return "ANIM003";
    case ErrorKind::Io: return "IO001";
  }
  return "ERR000";
}

const char* op_spelling(UnaryOp op) {
  return op == UnaryOp::Neg ? "-" : "not";
}

const char* op_spelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "div";
    case BinaryOp::Mod: return "mod";
    case BinaryOp::Eq: return "=";
    case BinaryOp::Neq: return "/=";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::In: return ":";
    case BinaryOp::Subset: return "<:";
    case BinaryOp::Union: return "\\/";
    case BinaryOp::Inter: return "/\\";
    case BinaryOp::Diff: return "\\";
    case BinaryOp::And: return "&";
    case BinaryOp::Or: return "or";
    case BinaryOp::Implies: return "=>";
    case BinaryOp::Equiv: return "<=>";
  }
  return "?";
}

namespace {
std::shared_ptr<Expr> node(ExprKind k, SourcePos p) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->pos = p;
  return e;
}
}  // namespace

ExprPtr Expr::int_lit(std::int64_t v, SourcePos p) {
  auto e = node(ExprKind::IntLit, p);
  e->int_value = v;
  return e;
}
ExprPtr Expr::bool_lit(bool v, SourcePos p) {
  auto e = node(ExprKind::BoolLit, p);
  e->bool_value = v;
  return e;
}
ExprPtr Expr::ident(std::string n, SourcePos p) {
  auto e = node(ExprKind::Ident, p);
  e->name = std::move(n);
  return e;
}
ExprPtr Expr::unary_of(UnaryOp op, ExprPtr c, SourcePos p) {
  auto e = node(ExprKind::Unary, p);
  e->unary = op;
  e->children = {std::move(c)};
  return e;
}
ExprPtr Expr::binary_of(BinaryOp op, ExprPtr l, ExprPtr r, SourcePos p) {
  auto e = node(ExprKind::Binary, p);
  e->binary = op;
  e->children = {std::move(l), std::move(r)};
  return e;
}
ExprPtr Expr::set_enum(std::vector<ExprPtr> elems, SourcePos p) {
  auto e = node(ExprKind::SetEnum, p);
  e->children = std::move(elems);
  return e;
}
ExprPtr Expr::empty_set(SourcePos p) { return node(ExprKind::EmptySet, p); }
ExprPtr Expr::type_atom(ExprKind k, SourcePos p) { return node(k, p); }
ExprPtr Expr::pow(ExprPtr inner, SourcePos p) {
  auto e = node(ExprKind::TypePow, p);
  e->children = {std::move(inner)};
  return e;
}

bool same_structure(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
  switch (a.kind) {
    case ExprKind::IntLit:
      if (a.int_value != b.int_value) return false;
      break;
    case ExprKind::BoolLit:
      if (a.bool_value != b.bool_value) return false;
      break;
    case ExprKind::Ident:
      if (a.name != b.name) return false;
      break;
    case ExprKind::Unary:
      if (a.unary != b.unary) return false;
      break;
    case ExprKind::Binary:
      if (a.binary != b.binary) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!same_structure(*a.children[i], *b.children[i])) return false;
  return true;
}

void visit(const Expr& e, const std::function<void(const Expr&)>& fn) {
  fn(e);
  for (const auto& c : e.children) visit(*c, fn);
}

std::vector<std::string> identifiers_of(const Expr& e) {
  std::vector<std::string> out;
  visit(e, [&](const Expr& n) {
    if (n.kind == ExprKind::Ident &&
        std::find(out.begin(), out.end(), n.name) == out.end())
      out.push_back(n.name);
  });
  return out;
}

std::vector<const Expr*> conjuncts(const Expr& e) {
  if (e.is_binary(BinaryOp::And)) {
    auto l = conjuncts(e.lhs());
    auto r = conjuncts(e.rhs());
    l.insert(l.end(), r.begin(), r.end());
    return l;
  }
  return {&e};
}

const char* symbol_kind_name(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::Variable: return "variable";
    case SymbolKind::Constant: return "constant";
    case SymbolKind::CarrierSet: return "carrier set";
    case SymbolKind::Parameter: return "parameter";
  }
  return "symbol";
}

const Symbol* SymbolTable::global(const std::string& name) const {
  auto it = globals_.find(name);
  return it == globals_.end() ? nullptr : &it->second;
}

const Symbol* SymbolTable::lookup(const std::string& name,
                                  const std::string* event) const {
  if (event) {
    auto scope = params_.find(*event);
    if (scope != params_.end()) {
      auto it = scope->second.find(name);
      if (it != scope->second.end()) return &it->second;
    }
  }
  return global(name);
}

std::vector<std::string> EventBModel::constants() const {
  std::vector<std::string> out;
  for (const auto& c : contexts)
    out.insert(out.end(), c.constants.begin(), c.constants.end());
  return out;
}

std::vector<std::string> EventBModel::carrier_sets() const {
  std::vector<std::string> out;
  for (const auto& c : contexts)
    out.insert(out.end(), c.sets.begin(), c.sets.end());
  return out;
}

std::string EventBModel::unit_of_context(const std::string& context) const {
  for (const auto& c : contexts)
    if (c.name == context) return c.source.empty() ? c.name : c.source;
  return machine.source.empty() ? machine.name : machine.source;
}

namespace {

bool same_preds(const std::vector<LabeledPredicate>& a,
                const std::vector<LabeledPredicate>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].label != b[i].label ||
        !same_structure(*a[i].predicate, *b[i].predicate))
      return false;
  return true;
}

bool same_event(const EventAst& a, const EventAst& b) {
  if (a.name != b.name || a.params != b.params || !same_preds(a.guards, b.guards) ||
      a.actions.size() != b.actions.size())
    return false;
  for (std::size_t i = 0; i < a.actions.size(); ++i) {
    const auto& x = a.actions[i];
    const auto& y = b.actions[i];
    if (x.label != y.label || x.target != y.target ||
        !same_structure(*x.rhs, *y.rhs))
      return false;
  }
  return true;
}

}  // namespace

bool same_structure(const MachineAst& a, const MachineAst& b) {
  if (a.name != b.name || a.sees != b.sees || a.variables != b.variables ||
      !same_preds(a.invariants, b.invariants) ||
      !same_event(a.initialisation, b.initialisation) ||
      a.events.size() != b.events.size())
    return false;
  for (std::size_t i = 0; i < a.events.size(); ++i)
    if (!same_event(a.events[i], b.events[i])) return false;
  return true;
}

bool same_structure(const ContextAst& a, const ContextAst& b) {
  return a.name == b.name && a.constants == b.constants && a.sets == b.sets &&
         same_preds(a.axioms, b.axioms);
}

bool same_structure(const EventBModel& a, const EventBModel& b) {
  if (!same_structure(a.machine, b.machine) ||
      a.contexts.size() != b.contexts.size())
    return false;
  for (std::size_t i = 0; i < a.contexts.size(); ++i)
    if (!same_structure(a.contexts[i], b.contexts[i])) return false;
  const auto& ga = a.symbols.globals();
  const auto& gb = b.symbols.globals();
  if (ga.size() != gb.size()) return false;
  for (const auto& [name, sym] : ga) {
    auto it = gb.find(name);
    if (it == gb.end() || it->second.kind != sym.kind ||
        it->second.owner != sym.owner)
      return false;
  }
  return true;
}

bool is_initialisation_name(const std::string& name) {
  static const std::string kInit = "INITIALISATION";
  if (name.size() != kInit.size()) return false;
  for (std::size_t i = 0; i < name.size(); ++i)
    if (std::toupper(static_cast<unsigned char>(name[i])) != kInit[i])
      return false;
  return true;
}

}  // namespace eb2dbc
