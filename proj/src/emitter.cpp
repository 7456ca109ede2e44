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

#include "eb2dbc/emitter.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

#include "eb2dbc/printer.hpp"

namespace eb2dbc {

namespace {

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

/// Assertion tags must be identifiers; Rodin labels need not be.
std::string tag_of(const std::string& label) {
  std::string t;
  for (char c : label)
    t += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  if (t.empty() || std::isdigit(static_cast<unsigned char>(t[0]))) t = "t_" + t;
  if (is_eiffel_reserved(t)) t += "_";
  return t;
}

bool mentions_nat(const Expr& t) {
  bool found = false;
  visit(t, [&](const Expr& e) { found = found || e.kind == ExprKind::TypeNat; });
  return found;
}

class Xi {
 public:
  Xi(const EventBModel& model, const TypeEnv& env, const std::string* event,
     XiMode mode, bool qualify)
      : model_(model), env_(env), event_(event), mode_(mode),
        qualify_(qualify) {}

  /// Reads of these variables become reads of the named locals.
  std::map<std::string, std::string> temps;

  EExprPtr run(const Expr& e, const std::optional<EbType>& hint) {
    types_ = annotate_types(e, model_, env_, event_, hint);
    return tr(e);
  }

 private:
  [[noreturn]] void unsupported(const Expr& e, const std::string& what) {
    throw Error(ErrorKind::UnsupportedExpr,
                what + " is outside the translatable subset: " + print_expr(e),
                e.pos)
        .with_subject(what);
  }

  const EbType& type_of(const Expr& e) {
    auto it = types_.find(&e);
    if (it == types_.end())
      throw Error(ErrorKind::UnsupportedExpr,
                  "expression is not well typed: " + print_expr(e), e.pos);
    return it->second;
  }

  EExprPtr tr(const Expr& e) {
    switch (e.kind) {
      case ExprKind::IntLit: return EExpr::int_lit(e.int_value);
      case ExprKind::BoolLit: return EExpr::bool_lit(e.bool_value);
      case ExprKind::Ident: return ident(e);
      case ExprKind::Unary:
        return EExpr::unary(e.unary == UnaryOp::Neg ? EUnOp::Neg : EUnOp::Not,
                            tr(*e.children[0]));
      case ExprKind::Binary: return binary(e);
      case ExprKind::SetEnum:
      case ExprKind::EmptySet: {
        std::vector<EExprPtr> elems;
        for (const auto& c : e.children) elems.push_back(tr(*c));
        return EExpr::set_literal(type_text(type_of(e).element()),
                                  std::move(elems));
      }
      default:
        unsupported(e, "a type expression used as a value");
    }
  }

  EExprPtr ident(const Expr& e) {
    const Symbol* s = model_.symbols.lookup(e.name, event_);
    if (!s) unsupported(e, "an unresolved identifier");
    switch (s->kind) {
      case SymbolKind::Parameter: return EExpr::argument(mangle(e.name), e.name);
      case SymbolKind::Constant:
        return EExpr::constant(mangle(e.name), e.name, qualify_);
      case SymbolKind::CarrierSet:
        unsupported(e, "a carrier set used as a value");
      case SymbolKind::Variable: break;
    }
    if (auto it = temps.find(e.name); it != temps.end())
      return EExpr::local(it->second, e.name);
    auto attr = EExpr::attribute(mangle(e.name), e.name);
    if (mode_ == XiMode::Plain) return attr;
    // sets are mutated in place by assign_from, so snapshot them
    if (env_.at(e.name).is_set()) return EExpr::old(EExpr::call(attr, "twin"));
    return EExpr::old(attr);
  }

  EExprPtr conj(EExprPtr a, EExprPtr b) {
    auto is_true = [](const EExprPtr& x) {
      return x->kind == EKind::BoolLit && x->bool_value;
    };
    if (is_true(a)) return b;
    if (is_true(b)) return a;
    return EExpr::binary(EBinOp::And, std::move(a), std::move(b));
  }

  // Membership of `x` in the type denoted by `t`.
  EExprPtr member(EExprPtr x, const Expr& t) {
    switch (t.kind) {
      case ExprKind::TypeNat:
        return EExpr::binary(EBinOp::Ge, std::move(x), EExpr::int_lit(0));
      case ExprKind::TypePow: {
        const Expr& inner = *t.children.at(0);
        if (!mentions_nat(inner)) return EExpr::bool_lit(true);
        const std::string c = next_cursor();
        auto body = member(EExpr::cursor(c), inner);
        --depth_;
        return EExpr::across(std::move(x), c, std::move(body));
      }
      default:
        // INT, BOOL and carrier sets hold by typing
        return EExpr::bool_lit(true);
    }
  }

  std::string next_cursor() {
    std::string c = depth_ == 0 ? "ic" : "ic_" + std::to_string(depth_ + 1);
    while (model_.symbols.lookup(c, event_) || is_eiffel_reserved(c)) c += "_";
    ++depth_;
    return c;
  }

  EExprPtr binary(const Expr& e) {
    const Expr& l = e.lhs();
    const Expr& r = e.rhs();
    auto bin = [&](EBinOp op) { return EExpr::binary(op, tr(l), tr(r)); };
    switch (e.binary) {
      case BinaryOp::Add: return bin(EBinOp::Add);
      case BinaryOp::Sub: return bin(EBinOp::Sub);
      case BinaryOp::Mul: return bin(EBinOp::Mul);
      case BinaryOp::Div: return bin(EBinOp::IntDiv);
      case BinaryOp::Mod: return bin(EBinOp::Mod);
      case BinaryOp::Lt: return bin(EBinOp::Lt);
      case BinaryOp::Le: return bin(EBinOp::Le);
      case BinaryOp::Gt: return bin(EBinOp::Gt);
      case BinaryOp::Ge: return bin(EBinOp::Ge);
      case BinaryOp::Or: return bin(EBinOp::Or);
      case BinaryOp::Implies: return bin(EBinOp::Implies);
      case BinaryOp::Equiv: return bin(EBinOp::Eq);
      case BinaryOp::And: return conj(tr(l), tr(r));
      case BinaryOp::Eq:
      case BinaryOp::Neq: {
        if (!type_of(l).is_set())
          return bin(e.binary == BinaryOp::Eq ? EBinOp::Eq : EBinOp::Neq);
        auto eq = EExpr::call(tr(l), "is_equal", {tr(r)});
        return e.binary == BinaryOp::Eq ? eq : EExpr::unary(EUnOp::Not, eq);
      }
      case BinaryOp::In:
        if (is_type_expression(r, model_)) return member(tr(l), r);
        return EExpr::call(tr(r), "has", {tr(l)});
      case BinaryOp::Subset:
        if (is_type_expression(r, model_)) {
          // l <: T is l : POW(T)
          if (!mentions_nat(r)) return EExpr::bool_lit(true);
          const std::string c = next_cursor();
          auto body = member(EExpr::cursor(c), r);
          --depth_;
          return EExpr::across(tr(l), c, std::move(body));
        }
        return EExpr::call(tr(l), "is_subset", {tr(r)});
      case BinaryOp::Union: return EExpr::call(tr(l), "union", {tr(r)});
      case BinaryOp::Inter: return EExpr::call(tr(l), "intersection", {tr(r)});
      case BinaryOp::Diff: return EExpr::call(tr(l), "difference", {tr(r)});
    }
    unsupported(e, "this operator");
  }

  const EventBModel& model_;
  const TypeEnv& env_;
  const std::string* event_;
  XiMode mode_;
  bool qualify_;
  ExprTypes types_;
  int depth_ = 0;
};

std::string comment_for(const EventAst& ev, const EventBModel& model) {
  return "Translated from event " + ev.name + " (" + model.machine.name + ")";
}

[[noreturn]] void collision(const std::string& what, const EventBModel& model) {
  throw Error(ErrorKind::DuplicateDeclaration,
              "name collision after translation: " + what, model.machine.pos,
              model.machine.source.empty() ? model.machine.name
                                           : model.machine.source)
      .with_subject(what);
}

// Body statements and ensure clauses shared by events and initialisation.
void translate_actions(const EventAst& ev, const EventBModel& model,
                       const TypeEnv& env, const EmitOptions& opts,
                       bool is_init, EiffelFeature& f) {
  const bool qualify = !opts.bare_constants;
  std::map<std::string, std::string> temps;
  if (!is_init) {
    // a variable assigned by one action and read by a later one is saved
    // first, so the body matches simultaneous substitution
    std::set<std::string> taken;
    for (const auto& [name, sym] : model.symbols.globals()) taken.insert(mangle(name));
    for (const auto& p : ev.params) taken.insert(mangle(p));
    std::set<std::string> assigned;
    for (const auto& a : ev.actions) {
      for (const auto& id : identifiers_of(*a.rhs))
        if (assigned.count(id) && model.is_variable(id) && !temps.count(id)) {
          std::string local = "old_" + mangle(id);
          while (taken.count(local)) local += "_";
          taken.insert(local);
          temps.emplace(id, local);
        }
      assigned.insert(a.target);
    }
    for (const auto& a : ev.actions) {
      auto it = temps.find(a.target);
      if (it == temps.end()) continue;
      // declaration order follows action order
      const EbType& t = env.at(a.target);
      f.locals.push_back({it->second, type_text(t), a.target});
      auto attr = EExpr::attribute(mangle(a.target), a.target);
      f.body.push_back(EStmt::assign(
          EExpr::local(it->second, a.target),
          t.is_set() ? EExpr::call(attr, "twin") : attr));
    }
  }

  for (const auto& a : ev.actions) {
    const EbType& t = env.at(a.target);
    Xi plain(model, env, &ev.name, XiMode::Plain, qualify);
    plain.temps = temps;
    auto rhs = plain.run(*a.rhs, t);
    auto target = EExpr::attribute(mangle(a.target), a.target);
    if (t.is_set()) {
      if (is_init) f.body.push_back(EStmt::create_empty(target));
      f.body.push_back(EStmt::assign_from(target, rhs));
    } else {
      f.body.push_back(EStmt::assign(target, rhs));
    }

    Xi old(model, env, &ev.name, XiMode::OldWrapped, qualify);
    auto post = old.run(*a.rhs, t);
    Assertion clause;
    clause.tag = tag_of(a.label);
    clause.source_label = a.label;
    clause.expr = t.is_set() ? EExpr::call(target, "is_equal", {post})
                             : EExpr::binary(EBinOp::Eq, target, post);
    f.ensure.push_back(std::move(clause));
  }
}

}  // namespace

std::string mangle(const std::string& name) {
  std::string m = lower(name);
  if (is_eiffel_reserved(m)) m += "_";
  return m;
}

std::string type_text(const EbType& t) {
  switch (t.kind()) {
    case EbType::Kind::Int: return "INTEGER";
    case EbType::Kind::Bool: return "BOOLEAN";
    case EbType::Kind::Carrier: return t.carrier_name();
    case EbType::Kind::Set: return "EBSET [" + type_text(t.element()) + "]";
  }
  return "ANY";
}

EExprPtr xi_expr(const Expr& e, const EventBModel& model, const TypeEnv& env,
                 XiMode mode, const std::string* event,
                 const std::optional<EbType>& hint, const EmitOptions& opts) {
  return Xi(model, env, event, mode, !opts.bare_constants).run(e, hint);
}

EiffelFeature translate_event(const EventAst& ev, const EventBModel& model,
                              const TypeEnv& env, const EmitOptions& opts) {
  EiffelFeature f;
  f.kind = EiffelFeature::Kind::Procedure;
  f.name = mangle(ev.name);
  f.source = ev.name;
  f.comment = comment_for(ev, model);
  for (const auto& p : ev.params)
    f.formals.push_back({mangle(p), type_text(env.at(p, &ev.name)), p});
  for (const auto& g : ev.guards) {
    Assertion clause;
    clause.tag = tag_of(g.label);
    clause.source_label = g.label;
    clause.expr = xi_expr(*g.predicate, model, env, XiMode::Plain, &ev.name,
                          EbType::boolean(), opts);
    f.require.push_back(std::move(clause));
  }
  translate_actions(ev, model, env, opts, false, f);
  return f;
}

EiffelFeature translate_init(const EventAst& init, const EventBModel& model,
                             const TypeEnv& env, bool has_context,
                             const EmitOptions& opts) {
  for (const auto& a : init.actions)
    for (const auto& id : identifiers_of(*a.rhs))
      if (model.is_variable(id))
        throw Error(ErrorKind::InitReadsState,
                    "initialisation action " + a.label + " reads variable '" +
                        id + "'",
                    a.pos,
                    model.machine.source.empty() ? model.machine.name
                                                 : model.machine.source)
            .with_subject(id)
            .with_detail(a.label);
  EiffelFeature f;
  f.kind = EiffelFeature::Kind::Procedure;
  f.name = "initialisation";
  f.source = init.name;
  f.comment = comment_for(init, model);
  if (has_context) f.body.push_back(EStmt::create_ctx());
  translate_actions(init, model, env, opts, true, f);
  return f;
}

EiffelUnit translate_machine(const EventBModel& model, const TypeEnv& env,
                             const EmitOptions& opts) {
  const MachineAst& m = model.machine;
  const bool has_context = !m.sees.empty();
  EiffelUnit u;
  u.name = m.name;
  u.creators = {"initialisation"};

  FeatureGroup init{"Initialisation", {}, {}};
  init.features.push_back(
      translate_init(m.initialisation, model, env, has_context, opts));
  u.groups.push_back(std::move(init));

  FeatureGroup events{"Events", {}, {}};
  for (const auto& ev : m.events)
    events.features.push_back(translate_event(ev, model, env, opts));
  u.groups.push_back(std::move(events));

  FeatureGroup access{"Access", {}, {}};
  if (has_context) {
    EiffelFeature ctx;
    ctx.kind = EiffelFeature::Kind::Attribute;
    ctx.name = "ctx";
    ctx.type = "CONSTANTS";
    access.features.push_back(std::move(ctx));
  }
  for (const auto& v : m.variables) {
    EiffelFeature a;
    a.kind = EiffelFeature::Kind::Attribute;
    a.name = mangle(v);
    a.type = type_text(env.at(v));
    a.source = v;
    access.features.push_back(std::move(a));
  }
  u.groups.push_back(std::move(access));

  std::set<std::string> tags;
  for (const auto& inv : m.invariants) {
    Assertion clause;
    clause.tag = tag_of(inv.label);
    clause.source_label = inv.label;
    clause.expr = xi_expr(*inv.predicate, model, env, XiMode::Plain, nullptr,
                          EbType::boolean(), opts);
    tags.insert(lower(clause.tag));
    u.invariants.push_back(std::move(clause));
  }
  // NAT typing that no invariant states still constrains the attribute
  for (const auto& v : m.variables) {
    if (!env.has_nat(TypeKey{"", v})) continue;
    bool stated = false;
    for (const auto& inv : m.invariants)
      for (const Expr* c : conjuncts(*inv.predicate))
        if (c->is_binary(BinaryOp::In) && c->rhs().kind == ExprKind::TypeNat &&
            c->lhs().kind == ExprKind::Ident && c->lhs().name == v)
          stated = true;
    if (stated) continue;
    Assertion clause;
    clause.tag = mangle(v) + "_nat";
    while (tags.count(lower(clause.tag))) clause.tag += "_";
    tags.insert(lower(clause.tag));
    clause.expr = EExpr::binary(EBinOp::Ge, EExpr::attribute(mangle(v), v),
                                EExpr::int_lit(0));
    u.invariants.push_back(std::move(clause));
  }

  if (auto problems = check_unit(u); !problems.empty())
    collision(problems.front(), model);
  return u;
}

EiffelUnit translate_context(const EventBModel& model, const TypeEnv& env,
                             const Interpretation& interp) {
  EiffelUnit u;
  u.name = "CONSTANTS";
  FeatureGroup group{"Constants", {}, {}};
  for (const auto& ctx : model.contexts) {
    for (const auto& c : ctx.constants) {
      const EbType& t = env.at(c);
      EiffelFeature f;
      f.kind = EiffelFeature::Kind::Once;
      f.name = mangle(c);
      f.type = type_text(t);
      f.source = c;
      f.comment = "Constant " + c + " (" + ctx.name + ")";
      auto bound = interp.constants.find(c);
      if (t.is_basic()) {
        if (bound == interp.constants.end())
          throw Error(ErrorKind::MissingBinding,
                      "constant '" + c + "' of type " + t.to_string() +
                          " needs a binding",
                      model.symbols.global(c)->pos,
                      model.unit_of_context(ctx.name))
              .with_subject(c);
        const Value& v = bound->second;
        f.body.push_back(EStmt::raw(
            "Result := " + (v.kind() == Value::Kind::Bool
                                ? std::string(v.as_bool() ? "True" : "False")
                                : v.to_string())));
      } else {
        f.body.push_back(EStmt::raw("create Result"));
        if (bound != interp.constants.end() && t.is_set() &&
            t.element().is_basic()) {
          for (const auto& x : bound->second.elements())
            f.body.push_back(EStmt::raw(
                "Result.extend (" +
                (x.kind() == Value::Kind::Bool
                     ? std::string(x.as_bool() ? "True" : "False")
                     : x.to_string()) +
                ")"));
        }
      }
      group.features.push_back(std::move(f));
    }
  }
  u.groups.push_back(std::move(group));

  std::set<std::string> tags;
  for (const auto& ctx : model.contexts) {
    for (const auto& axm : ctx.axioms) {
      Assertion clause;
      clause.tag = tag_of(axm.label);
      if (tags.count(lower(clause.tag)))
        clause.tag = tag_of(ctx.name + "_" + axm.label);
      while (tags.count(lower(clause.tag))) clause.tag += "_";
      tags.insert(lower(clause.tag));
      clause.source_label = axm.label;
      clause.expr = xi_expr(*axm.predicate, model, env, XiMode::Plain, nullptr,
                            EbType::boolean(), EmitOptions{true});
      u.invariants.push_back(std::move(clause));
    }
  }
  if (auto problems = check_unit(u); !problems.empty())
    collision(problems.front(), model);
  return u;
}

std::vector<EiffelUnit> translate_carrier_sets(const EventBModel& model) {
  std::vector<EiffelUnit> out;
  for (const auto& s : model.carrier_sets()) {
    EiffelUnit set;
    set.name = s;
    set.parents.push_back({"EBSET [" + s + "_ELEM]", {}});
    out.push_back(std::move(set));
    EiffelUnit elem;
    elem.name = s + "_ELEM";
    out.push_back(std::move(elem));
  }
  return out;
}

namespace {

EiffelFeature routine(std::string name, std::vector<Formal> formals,
                      std::string type, std::string comment,
                      std::vector<std::string> body,
                      std::vector<std::pair<std::string, std::string>> ensure = {}) {
  EiffelFeature f;
  f.kind = type.empty() ? EiffelFeature::Kind::Procedure
                        : EiffelFeature::Kind::Function;
  f.name = std::move(name);
  f.formals = std::move(formals);
  f.type = std::move(type);
  f.comment = std::move(comment);
  for (auto& s : body) f.body.push_back(EStmt::raw(std::move(s)));
  for (auto& [tag, text] : ensure) {
    Assertion a;
    a.tag = tag;
    a.raw = text;
    f.ensure.push_back(std::move(a));
  }
  return f;
}

}  // namespace

EiffelUnit emit_runtime() {
  EiffelUnit u;
  u.name = "EBSET";
  u.generics = {"G"};
  u.comment = "Finite mathematical sets with value semantics";
  u.parents.push_back({"ANY", {"default_create", "is_equal", "copy"}});
  u.creators = {"default_create", "make_empty", "make_from_array"};

  const std::string other = "EBSET [G]";
  FeatureGroup init{"Initialisation", {}, {}};
  init.features.push_back(routine(
      "default_create", {}, "", "Create an empty set.",
      {"create items.make (0)", "items.compare_objects"},
      {{"empty", "count = 0"}}));
  init.features.push_back(routine("make_empty", {}, "", "Create an empty set.",
                                  {"default_create"}, {{"empty", "count = 0"}}));
  init.features.push_back(routine(
      "make_from_array", {{"a", "ARRAY [G]", ""}}, "",
      "Create a set holding the items of `a'.",
      {"default_create", "across a as ic loop\n  extend (ic.item)\nend"}));
  u.groups.push_back(std::move(init));

  FeatureGroup access{"Access", {}, {}};
  access.features.push_back(routine("has", {{"x", "G", ""}}, "BOOLEAN",
                                    "Is `x' an element of the set?",
                                    {"Result := items.has (x)"}));
  access.features.push_back(routine("count", {}, "INTEGER",
                                    "Number of elements.",
                                    {"Result := items.count"}));
  access.features.push_back(routine(
      "is_subset", {{"other", other, ""}}, "BOOLEAN",
      "Is every element also in `other'?",
      {"Result := across items as ic all other.has (ic.item) end"}));
  access.features.push_back(routine(
      "is_equal", {{"other", "like Current", ""}}, "BOOLEAN",
      "Do both sets hold the same elements?",
      {"Result := count = other.count and then is_subset (other)"}));
  u.groups.push_back(std::move(access));

  FeatureGroup ops{"Operations", {}, {}};
  ops.features.push_back(routine(
      "union", {{"other", other, ""}}, other, "Elements of either set.",
      {"create Result.make_empty", "Result.assign_from (Current)",
       "across other.items as ic loop\n  Result.extend (ic.item)\nend"}));
  ops.features.push_back(routine(
      "intersection", {{"other", other, ""}}, other, "Elements of both sets.",
      {"create Result.make_empty",
       "across items as ic loop\n  if other.has (ic.item) then\n    "
       "Result.extend (ic.item)\n  end\nend"}));
  ops.features.push_back(routine(
      "difference", {{"other", other, ""}}, other,
      "Elements of the set that are not in `other'.",
      {"create Result.make_empty",
       "across items as ic loop\n  if not other.has (ic.item) then\n    "
       "Result.extend (ic.item)\n  end\nend"}));
  u.groups.push_back(std::move(ops));

  FeatureGroup change{"Element change", {}, {}};
  change.features.push_back(routine(
      "extend", {{"x", "G", ""}}, "", "Add `x' to the set.",
      {"if not items.has (x) then\n  items.extend (x)\nend"},
      {{"has_x", "has (x)"}}));
  change.features.push_back(routine(
      "assign_from", {{"other", other, ""}}, "",
      "Replace the elements by those of `other'.",
      {"if other /= Current then\n  items.wipe_out\n  across other.items as ic "
       "loop\n    items.extend (ic.item)\n  end\nend"},
      {{"same_elements", "is_subset (other) and other.is_subset (Current)"}}));
  change.features.push_back(routine(
      "copy", {{"other", "like Current", ""}}, "",
      "Make the set hold the elements of `other'.",
      {"if other /= Current then\n  create items.make (other.count)\n  "
       "items.compare_objects\n  across other.items as ic loop\n    "
       "items.extend (ic.item)\n  end\nend"}));
  u.groups.push_back(std::move(change));

  FeatureGroup impl{"Implementation", "EBSET", {}};
  EiffelFeature items;
  items.kind = EiffelFeature::Kind::Attribute;
  items.name = "items";
  items.type = "ARRAYED_LIST [G]";
  impl.features.push_back(std::move(items));
  u.groups.push_back(std::move(impl));

  Assertion inv;
  inv.tag = "items_exist";
  inv.raw = "items /= Void";
  u.invariants.push_back(std::move(inv));
  return u;
}

std::vector<const EiffelUnit*> Translation::units() const {
  std::vector<const EiffelUnit*> out{&machine};
  if (constants) out.push_back(&*constants);
  for (const auto& c : carriers) out.push_back(&c);
  out.push_back(&runtime);
  return out;
}

std::vector<std::string> missing_set_features(const EiffelUnit& unit,
                                              const EiffelUnit& runtime) {
  std::set<std::string> used;
  std::function<void(const EExpr&)> walk = [&](const EExpr& e) {
    if (e.kind == EKind::Call) used.insert(e.name);
    if (e.kind == EKind::SetLiteral)
      used.insert(e.children.empty() ? "make_empty" : "make_from_array");
    for (const auto& c : e.children) walk(*c);
  };
  auto clauses = [&](const std::vector<Assertion>& as) {
    for (const auto& a : as)
      if (a.expr) walk(*a.expr);
  };
  clauses(unit.invariants);
  for (const auto& g : unit.groups)
    for (const auto& f : g.features) {
      clauses(f.require);
      clauses(f.ensure);
      for (const auto& s : f.body) {
        if (s.value) walk(*s.value);
        if (s.kind == EStmt::Kind::AssignFrom) used.insert("assign_from");
        if (s.kind == EStmt::Kind::CreateEmpty) used.insert("make_empty");
      }
    }
  used.erase("twin");  // inherited from ANY, built on the redefined copy
  std::vector<std::string> missing;
  for (const auto& n : used)
    if (!runtime.feature(n)) missing.push_back(n);
  return missing;
}

Translation translate(const EventBModel& model, const TypeEnv& env,
                      const Interpretation& interp, const EmitOptions& opts) {
  Translation t{translate_machine(model, env, opts), std::nullopt,
                translate_carrier_sets(model), emit_runtime()};
  if (!model.machine.sees.empty())
    t.constants = translate_context(model, env, interp);

  std::set<std::string> classes;
  for (const EiffelUnit* u : t.units())
    if (!classes.insert(lower(u->name)).second)
      collision("class " + u->name, model);

  for (const EiffelUnit* u : t.units()) {
    std::vector<std::string> problems = check_unit(*u);
    for (auto& p : check_rendered(render(*u))) problems.push_back(std::move(p));
    for (auto& p : missing_set_features(*u, t.runtime))
      problems.push_back("EBSET has no feature '" + p + "'");
    if (!problems.empty())
      throw Error(ErrorKind::UnsupportedExpr,
                  "self-check of class " + u->name + " failed: " +
                      problems.front())
          .with_subject(u->name);
  }
  return t;
}

}  // namespace eb2dbc
