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

#include "eb2dbc/eval.hpp"

#include <algorithm>
#include <set>

#include "eb2dbc/printer.hpp"

namespace eb2dbc {

namespace {
[[noreturn]] void overflow() {
  throw Error(ErrorKind::Eval, "integer overflow");
}
}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) overflow();
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) overflow();
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

std::int64_t checked_div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw Error(ErrorKind::Eval, "division by zero");
  if (a == INT64_MIN && b == -1) overflow();
  return a / b;
}

std::int64_t checked_mod(std::int64_t a, std::int64_t b) {
  if (b == 0) throw Error(ErrorKind::Eval, "modulo by zero");
  if (b == -1) return 0;
  return a % b;
}

std::int64_t checked_neg(std::int64_t a) {
  if (a == INT64_MIN) overflow();
  return -a;
}

namespace {

Value all_atoms(const std::string& set, const Interpretation& interp) {
  std::vector<Value> atoms;
  for (int i = 0; i < interp.carrier_size(set); ++i)
    atoms.push_back(Value::atom(set, i));
  return Value::set(std::move(atoms));
}

class Evaluator {
 public:
  Evaluator(const EventBModel& model, const SimState& state,
            const Interpretation& interp, const Args* args,
            const SimState* old_state)
      : model_(model), state_(state), interp_(interp), args_(args),
        old_(old_state) {}

  Value run(const Expr& e) {
    switch (e.kind) {
      case ExprKind::IntLit: return Value::integer(e.int_value);
      case ExprKind::BoolLit: return Value::boolean(e.bool_value);
      case ExprKind::Ident: return ident(e);
      case ExprKind::Unary: {
        const Value v = run(*e.children.at(0));
        if (e.unary == UnaryOp::Neg) return Value::integer(checked_neg(v.as_int()));
        return Value::boolean(!v.as_bool());
      }
      case ExprKind::Binary: return binary(e);
      case ExprKind::SetEnum: {
        std::vector<Value> elems;
        for (const auto& c : e.children) elems.push_back(run(*c));
        return Value::set(std::move(elems));
      }
      case ExprKind::EmptySet: return Value::set({});
      case ExprKind::TypeInt:
      case ExprKind::TypeNat:
      case ExprKind::TypeBool:
      case ExprKind::TypePow:
        throw Error(ErrorKind::Eval,
                    "type expression '" + print_expr(e) + "' has no value",
                    e.pos);
    }
    throw Error(ErrorKind::Eval, "unknown expression", e.pos);
  }

 private:
  Value ident(const Expr& e) {
    if (args_) {
      auto it = args_->find(e.name);
      if (it != args_->end()) return it->second;
    }
    if (model_.is_variable(e.name)) {
      const SimState& s = old_ ? *old_ : state_;
      auto it = s.vars.find(e.name);
      if (it == s.vars.end())
        throw Error(ErrorKind::Eval, "variable '" + e.name + "' has no value",
                    e.pos)
            .with_subject(e.name);
      return it->second;
    }
    if (model_.is_carrier_set(e.name)) return all_atoms(e.name, interp_);
    if (model_.is_constant(e.name)) {
      auto it = interp_.constants.find(e.name);
      if (it == interp_.constants.end())
        throw Error(ErrorKind::MissingBinding,
                    "constant '" + e.name + "' has no binding", e.pos)
            .with_subject(e.name);
      return it->second;
    }
    throw Error(ErrorKind::Eval, "'" + e.name + "' has no value", e.pos)
        .with_subject(e.name);
  }

  bool is_type(const Expr& e) const { return is_type_expression(e, model_); }

  Value binary(const Expr& e) {
    const Expr& l = e.lhs();
    const Expr& r = e.rhs();
    switch (e.binary) {
      case BinaryOp::And:
        return Value::boolean(run(l).as_bool() && run(r).as_bool());
      case BinaryOp::Or:
        return Value::boolean(run(l).as_bool() || run(r).as_bool());
      case BinaryOp::Implies:
        return Value::boolean(!run(l).as_bool() || run(r).as_bool());
      case BinaryOp::Equiv:
        return Value::boolean(run(l).as_bool() == run(r).as_bool());
      case BinaryOp::In:
        if (is_type(r))
          return Value::boolean(member_of_type(run(l), r, model_, interp_));
        return Value::boolean(run(r).contains(run(l)));
      case BinaryOp::Subset: {
        const Value a = run(l);
        if (is_type(r)) {
          for (const auto& x : a.elements())
            if (!member_of_type(x, r, model_, interp_))
              return Value::boolean(false);
          return Value::boolean(true);
        }
        return Value::boolean(a.is_subset_of(run(r)));
      }
      default:
        break;
    }
    const Value a = run(l);
    const Value b = run(r);
    switch (e.binary) {
      case BinaryOp::Add: return Value::integer(checked_add(a.as_int(), b.as_int()));
      case BinaryOp::Sub: return Value::integer(checked_sub(a.as_int(), b.as_int()));
      case BinaryOp::Mul: return Value::integer(checked_mul(a.as_int(), b.as_int()));
      case BinaryOp::Div: return Value::integer(checked_div(a.as_int(), b.as_int()));
      case BinaryOp::Mod: return Value::integer(checked_mod(a.as_int(), b.as_int()));
      case BinaryOp::Eq: return Value::boolean(a == b);
      case BinaryOp::Neq: return Value::boolean(a != b);
      case BinaryOp::Lt: return Value::boolean(a.as_int() < b.as_int());
      case BinaryOp::Le: return Value::boolean(a.as_int() <= b.as_int());
      case BinaryOp::Gt: return Value::boolean(a.as_int() > b.as_int());
      case BinaryOp::Ge: return Value::boolean(a.as_int() >= b.as_int());
      case BinaryOp::Union: return a.set_union(b);
      case BinaryOp::Inter: return a.set_intersection(b);
      case BinaryOp::Diff: return a.set_difference(b);
      default:
        throw Error(ErrorKind::Eval, "unexpected operator", e.pos);
    }
  }

  const EventBModel& model_;
  const SimState& state_;
  const Interpretation& interp_;
  const Args* args_;
  const SimState* old_;
};

}  // namespace

Value eval(const Expr& e, const EventBModel& model, const SimState& state,
           const Interpretation& interp, const Args* args,
           const SimState* old_state) {
  return Evaluator(model, state, interp, args, old_state).run(e);
}

bool member_of_type(const Value& v, const Expr& t, const EventBModel& model,
                    const Interpretation& interp) {
  switch (t.kind) {
    case ExprKind::TypeInt: return v.kind() == Value::Kind::Int;
    case ExprKind::TypeNat:
      return v.kind() == Value::Kind::Int && v.as_int() >= 0;
    case ExprKind::TypeBool: return v.kind() == Value::Kind::Bool;
    case ExprKind::TypePow:
      if (v.kind() != Value::Kind::Set) return false;
      for (const auto& x : v.elements())
        if (!member_of_type(x, *t.children.at(0), model, interp)) return false;
      return true;
    case ExprKind::Ident:
      if (model.is_carrier_set(t.name))
        return v.kind() == Value::Kind::Atom && v.carrier() == t.name &&
               v.atom_index() >= 0 &&
               v.atom_index() < interp.carrier_size(t.name);
      break;
    default:
      break;
  }
  throw Error(ErrorKind::Eval, "'" + print_expr(t) + "' is not a type", t.pos);
}

std::vector<Value> enumerate_type(const EbType& t, const Interpretation& interp) {
  std::vector<Value> out;
  switch (t.kind()) {
    case EbType::Kind::Int:
      for (int i = -interp.param_bound; i <= interp.param_bound; ++i)
        out.push_back(Value::integer(i));
      break;
    case EbType::Kind::Bool:
      out = {Value::boolean(false), Value::boolean(true)};
      break;
    case EbType::Kind::Carrier:
      for (int i = 0; i < interp.carrier_size(t.carrier_name()); ++i)
        out.push_back(Value::atom(t.carrier_name(), i));
      break;
    case EbType::Kind::Set:
      throw Error(ErrorKind::UnsupportedParameter,
                  "set-typed parameters cannot be enumerated (" +
                      t.to_string() + ")");
  }
  return out;
}

namespace {

class BindingConverter {
 public:
  BindingConverter(const Interpretation& interp, std::string unit)
      : interp_(interp), unit_(std::move(unit)) {}

  Value convert(const std::string& key, const BindingLiteral& lit,
                const EbType& t, int line) {
    switch (t.kind()) {
      case EbType::Kind::Int:
        if (lit.kind == BindingLiteral::Kind::Int)
          return Value::integer(lit.int_value);
        break;
      case EbType::Kind::Bool:
        if (lit.kind == BindingLiteral::Kind::Bool)
          return Value::boolean(lit.bool_value);
        break;
      case EbType::Kind::Carrier:
        if (lit.kind == BindingLiteral::Kind::Name) {
          const auto& names = interp_.carriers.at(t.carrier_name());
          auto it = std::find(names.begin(), names.end(), lit.name);
          if (it == names.end())
            fail(key, "'" + lit.name + "' is not an element of " +
                          t.carrier_name(), line);
          return Value::atom(t.carrier_name(),
                             static_cast<int>(it - names.begin()));
        }
        break;
      case EbType::Kind::Set:
        if (lit.kind == BindingLiteral::Kind::Enum) {
          std::vector<Value> elems;
          for (const auto& e : lit.elems)
            elems.push_back(convert(key, e, t.element(), line));
          return Value::set(std::move(elems));
        }
        break;
    }
    fail(key, "value '" + lit.to_string() + "' does not have type " +
                  t.to_string(), line);
  }

  [[noreturn]] void fail(const std::string& key, const std::string& msg,
                         int line) {
    throw Error(ErrorKind::BadBinding, "binding for '" + key + "': " + msg,
                {line, 1}, unit_)
        .with_subject(key);
  }

 private:
  const Interpretation& interp_;
  std::string unit_;
};

std::vector<std::string> carrier_elements(const std::string& set,
                                          const ConstantBindings::Entry* entry,
                                          const ConstantBindings& b) {
  std::vector<std::string> names;
  auto bad = [&](const std::string& msg) {
    throw Error(ErrorKind::BadBinding,
                "binding for carrier set '" + set + "': " + msg,
                {entry->line, 1}, b.unit)
        .with_subject(set);
  };
  if (!entry) {
    for (int i = 1; i <= kDefaultCarrierSize; ++i)
      names.push_back(set + std::to_string(i));
    return names;
  }
  const BindingLiteral& lit = entry->value;
  if (lit.kind == BindingLiteral::Kind::Int) {
    if (lit.int_value < 1 || lit.int_value > 1000)
      bad("size must lie in [1, 1000]");
    for (int i = 1; i <= lit.int_value; ++i)
      names.push_back(set + std::to_string(i));
    return names;
  }
  if (lit.kind != BindingLiteral::Kind::Enum)
    bad("expected a size or an enumeration of element names");
  if (lit.elems.empty()) bad("a carrier set must have at least one element");
  std::set<std::string> seen;
  for (const auto& e : lit.elems) {
    if (e.kind != BindingLiteral::Kind::Name)
      bad("'" + e.to_string() + "' is not an element name");
    if (!seen.insert(e.name).second) bad("'" + e.name + "' listed twice");
    names.push_back(e.name);
  }
  return names;
}

}  // namespace

Value literal_value(const BindingLiteral& lit, const EbType& t,
                    const Interpretation& interp, const std::string& what,
                    int line, const std::string& unit) {
  return BindingConverter(interp, unit).convert(what, lit, t, line);
}

Interpretation make_interpretation(const EventBModel& model,
                                   const TypeEnv& env,
                                   const ConstantBindings& bindings,
                                   int param_bound, bool require_basic) {
  Interpretation interp;
  interp.param_bound = param_bound;

  for (const auto& [key, entry] : bindings.entries) {
    if (!model.is_constant(key) && !model.is_carrier_set(key))
      throw Error(ErrorKind::BadBinding,
                  "'" + key + "' is not a constant or carrier set of the model",
                  {entry.line, 1}, bindings.unit)
          .with_subject(key);
  }

  for (const auto& s : model.carrier_sets())
    interp.carriers[s] = carrier_elements(s, bindings.find(s), bindings);

  BindingConverter conv(interp, bindings.unit);
  for (const auto& c : model.constants()) {
    const EbType& t = env.at(c);
    const auto* entry = bindings.find(c);
    if (!entry) {
      if (require_basic && t.is_basic())
        throw Error(ErrorKind::MissingBinding,
                    "constant '" + c + "' of type " + t.to_string() +
                        " needs a binding",
                    model.symbols.global(c)->pos,
                    model.unit_of_context(model.symbols.global(c)->owner))
            .with_subject(c);
      continue;
    }
    interp.constants[c] = conv.convert(c, entry->value, t, entry->line);
  }

  const SimState empty;
  for (const auto& ctx : model.contexts) {
    for (const auto& axm : ctx.axioms) {
      std::string first;
      bool all_bound = true;
      for (const auto& id : identifiers_of(*axm.predicate)) {
        if (!model.is_constant(id)) continue;
        if (first.empty()) first = id;
        if (!interp.constants.count(id)) all_bound = false;
      }
      if (!all_bound) continue;
      if (!eval(*axm.predicate, model, empty, interp).as_bool())
        throw Error(ErrorKind::BindingViolatesAxioms,
                    "bindings violate axiom " + axm.label + ": " +
                        print_expr(*axm.predicate),
                    axm.pos, model.unit_of_context(ctx.name))
            .with_subject(first)
            .with_detail(axm.label);
    }
  }
  return interp;
}

}  // namespace eb2dbc
