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

#include "eb2dbc/printer.hpp"

#include <sstream>

namespace eb2dbc {
namespace {

enum Level {
  kEquiv = 1, kImplies, kOr, kAnd, kNot, kRel, kUnion, kInter, kAdd, kMul,
  kNeg, kAtom,
};

int level_of(BinaryOp op) {
  switch (op) {
    case BinaryOp::Equiv: return kEquiv;
    case BinaryOp::Implies: return kImplies;
    case BinaryOp::Or: return kOr;
    case BinaryOp::And: return kAnd;
    case BinaryOp::Union:
    case BinaryOp::Diff: return kUnion;
    case BinaryOp::Inter: return kInter;
    case BinaryOp::Add:
    case BinaryOp::Sub: return kAdd;
    case BinaryOp::Mul:
    case BinaryOp::Div:
    case BinaryOp::Mod: return kMul;
    default: return kRel;
  }
}

int level_of(const Expr& e) {
  if (e.kind == ExprKind::Binary) return level_of(e.binary);
  if (e.kind == ExprKind::Unary) return e.unary == UnaryOp::Not ? kNot : kNeg;
  return kAtom;
}

void print(const Expr& e, int min_level, std::ostream& os) {
  const bool paren = level_of(e) < min_level;
  if (paren) os << '(';
  switch (e.kind) {
    case ExprKind::IntLit: os << e.int_value; break;
    case ExprKind::BoolLit: os << (e.bool_value ? "TRUE" : "FALSE"); break;
    case ExprKind::Ident: os << e.name; break;
    case ExprKind::TypeInt: os << "INT"; break;
    case ExprKind::TypeNat: os << "NAT"; break;
    case ExprKind::TypeBool: os << "BOOL"; break;
    case ExprKind::TypePow:
      os << "POW(";
      print(*e.children[0], kEquiv, os);
      os << ')';
      break;
    case ExprKind::EmptySet: os << "{}"; break;
    case ExprKind::SetEnum:
      os << '{';
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) os << ", ";
        print(*e.children[i], kEquiv, os);
      }
      os << '}';
      break;
    case ExprKind::Unary:
      if (e.unary == UnaryOp::Not) {
        os << "not ";
        print(*e.children[0], kNot, os);
      } else {
        os << '-';
        // "- -x" keeps the two minus signs apart for readability.
        if (e.children[0]->kind == ExprKind::Unary) os << ' ';
        print(*e.children[0], kNeg, os);
      }
      break;
    case ExprKind::Binary: {
      const int lvl = level_of(e.binary);
      int left = lvl, right = lvl + 1;
      if (e.binary == BinaryOp::Implies) {
        left = lvl + 1;
        right = lvl;
      } else if (lvl == kRel) {
        left = right = kRel + 1;
      }
      print(e.lhs(), left, os);
      os << ' ' << op_spelling(e.binary) << ' ';
      print(e.rhs(), right, os);
      break;
    }
  }
  if (paren) os << ')';
}

void print_preds(const std::vector<LabeledPredicate>& ps, const char* indent,
                 std::ostream& os) {
  for (const auto& p : ps)
    os << indent << '@' << p.label << ' ' << print_expr(*p.predicate) << '\n';
}

void print_event(const EventAst& ev, std::ostream& os) {
  os << "  event " << ev.name << '\n';
  if (!ev.params.empty()) {
    os << "  any";
    for (const auto& p : ev.params) os << ' ' << p;
    os << '\n';
  }
  if (!ev.guards.empty()) {
    os << "  where\n";
    print_preds(ev.guards, "    ", os);
  }
  if (!ev.actions.empty()) {
    os << "  then\n";
    for (const auto& a : ev.actions)
      os << "    @" << a.label << ' ' << a.target << " := "
         << print_expr(*a.rhs) << '\n';
  }
  os << "  end\n";
}

}  // namespace

std::string print_expr(const Expr& e) {
  std::ostringstream os;
  print(e, kEquiv, os);
  return os.str();
}

std::string print_machine(const MachineAst& m) {
  std::ostringstream os;
  os << "machine " << m.name << '\n';
  if (!m.sees.empty()) {
    os << "sees ";
    for (std::size_t i = 0; i < m.sees.size(); ++i)
      os << (i ? ", " : "") << m.sees[i];
    os << '\n';
  }
  if (!m.variables.empty()) {
    os << "variables";
    for (const auto& v : m.variables) os << ' ' << v;
    os << '\n';
  }
  if (!m.invariants.empty()) {
    os << "invariants\n";
    print_preds(m.invariants, "  ", os);
  }
  os << "events\n";
  print_event(m.initialisation, os);
  for (const auto& ev : m.events) print_event(ev, os);
  os << "end\n";
  return os.str();
}

std::string print_context(const ContextAst& c) {
  std::ostringstream os;
  os << "context " << c.name << '\n';
  if (!c.constants.empty()) {
    os << "constants";
    for (const auto& k : c.constants) os << ' ' << k;
    os << '\n';
  }
  if (!c.sets.empty()) {
    os << "sets";
    for (const auto& s : c.sets) os << ' ' << s;
    os << '\n';
  }
  if (!c.axioms.empty()) {
    os << "axioms\n";
    print_preds(c.axioms, "  ", os);
  }
  os << "end\n";
  return os.str();
}

}  // namespace eb2dbc
