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

#include "eb2dbc/typing.hpp"

#include <algorithm>
#include <tuple>

namespace eb2dbc {

std::string EbType::to_string() const {
  switch (kind_) {
    case Kind::Int: return "INT";
    case Kind::Bool: return "BOOL";
    case Kind::Carrier: return carrier_;
    case Kind::Set: return "POW(" + elem_->to_string() + ")";
  }
  return "?";
}

bool operator==(const EbType& a, const EbType& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case EbType::Kind::Carrier: return a.carrier_ == b.carrier_;
    case EbType::Kind::Set: return *a.elem_ == *b.elem_;
    default: return true;
  }
}

const EbType* TypeEnv::lookup(const std::string& name,
                              const std::string* event) const {
  if (event) {
    auto it = entries_.find(TypeKey{*event, name});
    if (it != entries_.end()) return &it->second.type;
  }
  auto it = entries_.find(TypeKey{"", name});
  return it == entries_.end() ? nullptr : &it->second.type;
}

const EbType& TypeEnv::at(const std::string& name,
                          const std::string* event) const {
  if (const EbType* t = lookup(name, event)) return *t;
  throw Error(ErrorKind::Type, "no type recorded for '" + name + "'")
      .with_subject(name);
}

const std::string* TypeEnv::origin(const TypeKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second.origin;
}

bool operator==(const TypeEnv& a, const TypeEnv& b) {
  if (a.entries_.size() != b.entries_.size() || a.nat_.size() != b.nat_.size())
    return false;
  for (const auto& [k, e] : a.entries_) {
    auto it = b.entries_.find(k);
    if (it == b.entries_.end() || it->second.type != e.type ||
        it->second.origin != e.origin)
      return false;
  }
  for (const auto& [k, n] : a.nat_)
    if (!b.nat_.count(k)) return false;
  return true;
}

std::string Diagnostic::format() const {
  std::string out = severity == Severity::Error ? "error" : "warning";
  out += ' ' + code + ' ' + unit + ':' + std::to_string(pos.line) + ':' +
         std::to_string(pos.column) + ' ' + message;
  return out;
}

bool is_type_expression(const Expr& e, const EventBModel& model) {
  switch (e.kind) {
    case ExprKind::TypeInt:
    case ExprKind::TypeNat:
    case ExprKind::TypeBool:
      return true;
    case ExprKind::TypePow:
      return is_type_expression(*e.children[0], model);
    case ExprKind::Ident:
      return model.is_carrier_set(e.name);
    default:
      return false;
  }
}

EbType denoted_type(const Expr& e, const EventBModel& model) {
  switch (e.kind) {
    case ExprKind::TypeInt:
    case ExprKind::TypeNat:
      return EbType::integer();
    case ExprKind::TypeBool:
      return EbType::boolean();
    case ExprKind::TypePow:
      return EbType::set_of(denoted_type(*e.children[0], model));
    case ExprKind::Ident:
      if (model.is_carrier_set(e.name)) return EbType::carrier(e.name);
      break;
    default:
      break;
  }
  throw Error(ErrorKind::Type, "not a type expression", e.pos);
}

namespace {

bool is_arith(BinaryOp op) {
  return op == BinaryOp::Add || op == BinaryOp::Sub || op == BinaryOp::Mul ||
         op == BinaryOp::Div || op == BinaryOp::Mod;
}
bool is_order(BinaryOp op) {
  return op == BinaryOp::Lt || op == BinaryOp::Le || op == BinaryOp::Gt ||
         op == BinaryOp::Ge;
}
bool is_logic(BinaryOp op) {
  return op == BinaryOp::And || op == BinaryOp::Or ||
         op == BinaryOp::Implies || op == BinaryOp::Equiv;
}
bool is_setop(BinaryOp op) {
  return op == BinaryOp::Union || op == BinaryOp::Inter || op == BinaryOp::Diff;
}

std::string unit_of(const std::string& source, const std::string& name) {
  return source.empty() ? name : source;
}

// One clause the inference harvests from.
struct Site {
  const Expr* pred;
  const std::string* event;  // parameter scope, or null
  std::string origin;        // stable, human-readable clause id
  std::string label;
  std::string unit;
};

bool types_here(const EventBModel& m, const std::string& name,
                const Site& site) {
  if (!site.event) return true;
  auto it = m.symbols.params().find(*site.event);
  return it != m.symbols.params().end() && it->second.count(name) != 0;
}

std::vector<Site> collect_sites(const EventBModel& m) {
  std::vector<Site> sites;
  for (const auto& ctx : m.contexts)
    for (const auto& ax : ctx.axioms)
      sites.push_back({ax.predicate.get(), nullptr,
                       "axiom " + ax.label + " (" + ctx.name + ")", ax.label,
                       unit_of(ctx.source, ctx.name)});
  const std::string munit = unit_of(m.machine.source, m.machine.name);
  for (const auto& inv : m.machine.invariants)
    sites.push_back({inv.predicate.get(), nullptr, "invariant " + inv.label,
                     inv.label, munit});
  for (const auto& ev : m.machine.events)
    for (const auto& g : ev.guards)
      sites.push_back({g.predicate.get(), &ev.name,
                       "guard " + g.label + " (" + ev.name + ")", g.label,
                       munit});
  return sites;
}

class Inferrer {
 public:
  explicit Inferrer(const EventBModel& m) : m_(m), sites_(collect_sites(m)) {}

  TypeInference run() {
    for (const auto& s : m_.carrier_sets())
      types_.insert_or_assign(TypeKey{"", s},
                              Slot{EbType::set_of(EbType::carrier(s)),
                                   "carrier set " + s, true});
    do {
      changed_ = false;
      for (const auto& site : sites_) walk(*site.pred, site, true);
    } while (changed_);

    TypeInference result;
    for (const auto& [key, d] : conflicts_) result.diagnostics.push_back(d);

    const std::string munit = unit_of(m_.machine.source, m_.machine.name);
    for (const auto& [name, sym] : m_.symbols.globals()) {
      if (sym.kind == SymbolKind::CarrierSet) continue;
      if (types_.count(TypeKey{"", name})) continue;
      const std::string unit = sym.kind == SymbolKind::Variable
                                   ? munit
                                   : m_.unit_of_context(sym.owner);
      result.diagnostics.push_back(
          {Severity::Error, "TYPE001", unit, sym.pos,
           std::string("no typing constraint found for ") +
               symbol_kind_name(sym.kind) + " '" + name + "'"});
    }
    for (const auto& [event, scope] : m_.symbols.params())
      for (const auto& [name, sym] : scope)
        if (!types_.count(TypeKey{event, name}))
          result.diagnostics.push_back(
              {Severity::Error, "TYPE003", munit, sym.pos,
               "parameter '" + name + "' of event '" + event +
                   "' has no typing guard"});

    std::sort(result.diagnostics.begin(), result.diagnostics.end(),
              [](const Diagnostic& a, const Diagnostic& b) {
                return std::tie(a.unit, a.pos.line, a.pos.column, a.code,
                                a.message) < std::tie(b.unit, b.pos.line,
                                                      b.pos.column, b.code,
                                                      b.message);
              });
    if (!result.diagnostics.empty()) return result;

    TypeEnv env;
    for (const auto& [key, slot] : types_) env.set(key, slot.type, slot.origin);
    for (const auto& [key, nat] : nat_) env.add_nat(key, nat);
    result.env = std::move(env);
    return result;
  }

 private:
  struct Slot {
    EbType type;
    std::string origin;
    bool direct;
  };

  TypeKey key_of(const std::string& name, const std::string* event) const {
    const Symbol* s = m_.symbols.lookup(name, event);
    if (s && s->kind == SymbolKind::Parameter) return {*event, name};
    return {"", name};
  }

  void assign(const Expr& id, const EbType& t, const Site& site, bool direct) {
    const TypeKey key = key_of(id.name, site.event);
    auto it = types_.find(key);
    if (it == types_.end()) {
      types_.emplace(key, Slot{t, site.origin, direct});
      changed_ = true;
      return;
    }
    Slot& slot = it->second;
    if (slot.type != t) {
      if (!conflicts_.count(key))
        conflicts_.emplace(
            key, Diagnostic{Severity::Error, "TYPE002", site.unit, id.pos,
                            "conflicting types for '" + id.name + "': " +
                                slot.type.to_string() + " and " + t.to_string()});
      return;
    }
    // Keep the origin independent of clause order.
    if ((direct && !slot.direct) ||
        (direct == slot.direct && site.origin < slot.origin)) {
      slot.origin = site.origin;
      slot.direct = direct;
    }
  }

  std::optional<EbType> peek(const Expr& e, const Site& site) const {
    switch (e.kind) {
      case ExprKind::IntLit: return EbType::integer();
      case ExprKind::BoolLit: return EbType::boolean();
      case ExprKind::Ident: {
        if (m_.is_carrier_set(e.name))
          return EbType::set_of(EbType::carrier(e.name));
        auto it = types_.find(key_of(e.name, site.event));
        if (it == types_.end()) return std::nullopt;
        return it->second.type;
      }
      case ExprKind::Unary:
        return e.unary == UnaryOp::Neg ? EbType::integer() : EbType::boolean();
      case ExprKind::Binary:
        if (is_arith(e.binary)) return EbType::integer();
        if (is_setop(e.binary)) {
          if (auto t = peek(e.lhs(), site)) return t;
          return peek(e.rhs(), site);
        }
        return EbType::boolean();
      case ExprKind::SetEnum:
        for (const auto& c : e.children)
          if (auto t = peek(*c, site)) return EbType::set_of(*t);
        return std::nullopt;
      case ExprKind::TypeInt:
      case ExprKind::TypeNat:
      case ExprKind::TypeBool:
      case ExprKind::TypePow:
        if (is_type_expression(e, m_))
          return EbType::set_of(denoted_type(e, m_));
        return std::nullopt;
      case ExprKind::EmptySet:
        return std::nullopt;
    }
    return std::nullopt;
  }

  void constrain(const Expr& e, const EbType& t, const Site& site,
                 bool direct = false) {
    if (e.kind == ExprKind::Ident) {
      if (!m_.is_carrier_set(e.name)) assign(e, t, site, direct);
    } else if (e.kind == ExprKind::Binary && is_setop(e.binary)) {
      constrain(e.lhs(), t, site);
      constrain(e.rhs(), t, site);
    } else if (e.kind == ExprKind::SetEnum && t.is_set()) {
      for (const auto& c : e.children) constrain(*c, t.element(), site);
    }
  }

  void unify(const Expr& a, const Expr& b, const Site& site) {
    auto t = peek(a, site);
    if (!t) t = peek(b, site);
    if (!t) return;
    constrain(a, *t, site);
    constrain(b, *t, site);
  }

  void walk(const Expr& e, const Site& site, bool top) {
    if (e.kind == ExprKind::Unary) {
      constrain(*e.children[0],
                e.unary == UnaryOp::Neg ? EbType::integer() : EbType::boolean(),
                site);
      walk(*e.children[0], site, false);
      return;
    }
    if (e.kind == ExprKind::SetEnum) {
      std::optional<EbType> t;
      for (const auto& c : e.children)
        if (!t) t = peek(*c, site);
      for (const auto& c : e.children) {
        if (t) constrain(*c, *t, site);
        walk(*c, site, false);
      }
      return;
    }
    if (e.kind != ExprKind::Binary) return;

    const Expr& l = e.lhs();
    const Expr& r = e.rhs();
    const BinaryOp op = e.binary;
    if (op == BinaryOp::And) {
      walk(l, site, top);
      walk(r, site, top);
      return;
    }
    if (is_logic(op)) {
      constrain(l, EbType::boolean(), site);
      constrain(r, EbType::boolean(), site);
    } else if (is_arith(op) || is_order(op)) {
      constrain(l, EbType::integer(), site);
      constrain(r, EbType::integer(), site);
    } else if (op == BinaryOp::Eq || op == BinaryOp::Neq || is_setop(op)) {
      unify(l, r, site);
    } else if (op == BinaryOp::In || op == BinaryOp::Subset) {
      if (is_type_expression(r, m_)) {
        if (top) {
          EbType t = denoted_type(r, m_);
          if (op == BinaryOp::Subset) t = EbType::set_of(t);
          constrain(l, t, site, /*direct=*/true);
          // a guard `v : NAT` on a machine variable is a condition, not a
          // typing of v
          if (op == BinaryOp::In && r.kind == ExprKind::TypeNat &&
              l.kind == ExprKind::Ident && types_here(m_, l.name, site)) {
            nat_.emplace(key_of(l.name, site.event),
                         NatConstraint{site.label, site.unit, e.pos});
          }
        }
        walk(l, site, false);
        return;
      }
      if (op == BinaryOp::Subset) {
        unify(l, r, site);
      } else if (auto rt = peek(r, site); rt && rt->is_set()) {
        constrain(l, rt->element(), site);
      } else if (auto lt = peek(l, site)) {
        constrain(r, EbType::set_of(*lt), site);
      }
    }
    walk(l, site, false);
    walk(r, site, false);
  }

  const EventBModel& m_;
  std::vector<Site> sites_;
  std::map<TypeKey, Slot> types_;
  std::map<TypeKey, NatConstraint> nat_;
  std::map<TypeKey, Diagnostic> conflicts_;
  bool changed_ = false;
};

// Bottom-up checker shared by check_wellformed and annotate_types.
class Checker {
 public:
  Checker(const EventBModel& m, const TypeEnv& env, std::string unit,
          const std::string* event, std::vector<Diagnostic>* diags,
          ExprTypes* out)
      : m_(m), env_(env), unit_(std::move(unit)), event_(event),
        diags_(diags), out_(out) {}

  std::optional<EbType> check(const Expr& e, const std::optional<EbType>& hint) {
    auto t = compute(e, hint);
    if (t && out_) out_->insert_or_assign(&e, *t);
    return t;
  }

 private:
  void report(const char* code, const Expr& at, std::string msg) {
    if (diags_)
      diags_->push_back({Severity::Error, code, unit_, at.pos, std::move(msg)});
  }

  std::optional<EbType> expect(const Expr& e, const EbType& t, const Expr& op) {
    auto got = check(e, t);
    if (got && *got != t) {
      report("TYPE010", e,
             std::string("operand of '") + spelling(op) + "' must be " +
                 t.to_string() + ", found " + got->to_string());
      return std::nullopt;
    }
    return got;
  }

  static const char* spelling(const Expr& op) {
    return op.kind == ExprKind::Unary ? op_spelling(op.unary)
                                      : op_spelling(op.binary);
  }

  // Checks both sides, giving an empty-set side the other side's type.
  std::pair<std::optional<EbType>, std::optional<EbType>> pair(
      const Expr& l, const Expr& r, const std::optional<EbType>& hint) {
    if (l.kind == ExprKind::EmptySet && r.kind != ExprKind::EmptySet) {
      auto tr = check(r, hint);
      auto tl = check(l, tr ? tr : hint);
      return {tl, tr};
    }
    auto tl = check(l, hint);
    auto tr = check(r, tl ? tl : hint);
    return {tl, tr};
  }

  std::optional<EbType> compute(const Expr& e,
                                const std::optional<EbType>& hint) {
    switch (e.kind) {
      case ExprKind::IntLit: return EbType::integer();
      case ExprKind::BoolLit: return EbType::boolean();
      case ExprKind::Ident: {
        if (m_.is_carrier_set(e.name)) {
          report("TYPE013", e,
                 "carrier set '" + e.name +
                     "' may only appear on the right of ':' or '<:'");
          return std::nullopt;
        }
        if (const EbType* t = env_.lookup(e.name, event_)) return *t;
        report("TYPE010", e, "'" + e.name + "' has no type");
        return std::nullopt;
      }
      case ExprKind::TypeInt:
      case ExprKind::TypeNat:
      case ExprKind::TypeBool:
      case ExprKind::TypePow:
        report("TYPE013", e,
               "type expression may only appear on the right of ':' or '<:'");
        return std::nullopt;
      case ExprKind::EmptySet:
        if (hint && hint->is_set()) return hint;
        report("TYPE010", e, "cannot determine the element type of {}");
        return std::nullopt;
      case ExprKind::SetEnum: {
        std::optional<EbType> elem;
        if (hint && hint->is_set()) elem = hint->element();
        std::optional<EbType> first;
        bool ok = true;
        for (const auto& c : e.children) {
          auto t = check(*c, first ? first : elem);
          if (!t) {
            ok = false;
            continue;
          }
          if (!first) {
            first = t;
          } else if (*t != *first) {
            report("TYPE010", *c,
                   "set elements must share one type: " + first->to_string() +
                       " and " + t->to_string());
            ok = false;
          }
        }
        if (!ok || !first) return std::nullopt;
        return EbType::set_of(*first);
      }
      case ExprKind::Unary:
        if (e.unary == UnaryOp::Neg) {
          if (!expect(*e.children[0], EbType::integer(), e)) return std::nullopt;
          return EbType::integer();
        }
        if (!expect(*e.children[0], EbType::boolean(), e)) return std::nullopt;
        return EbType::boolean();
      case ExprKind::Binary:
        return binary(e, hint);
    }
    return std::nullopt;
  }

  std::optional<EbType> binary(const Expr& e, const std::optional<EbType>& hint) {
    const BinaryOp op = e.binary;
    const Expr& l = e.lhs();
    const Expr& r = e.rhs();
    if (is_arith(op) || is_order(op)) {
      auto a = expect(l, EbType::integer(), e);
      auto b = expect(r, EbType::integer(), e);
      if (!a || !b) return std::nullopt;
      return is_arith(op) ? EbType::integer() : EbType::boolean();
    }
    if (is_logic(op)) {
      auto a = expect(l, EbType::boolean(), e);
      auto b = expect(r, EbType::boolean(), e);
      if (!a || !b) return std::nullopt;
      return EbType::boolean();
    }
    if (op == BinaryOp::Eq || op == BinaryOp::Neq) {
      auto [a, b] = pair(l, r, std::nullopt);
      if (!a || !b) return std::nullopt;
      if (*a != *b) {
        report("TYPE010", e,
               std::string("operands of '") + op_spelling(op) +
                   "' differ in type: " + a->to_string() + " and " +
                   b->to_string());
        return std::nullopt;
      }
      return EbType::boolean();
    }
    if (op == BinaryOp::In || op == BinaryOp::Subset) {
      if (is_type_expression(r, m_)) {
        EbType want = denoted_type(r, m_);
        if (out_) out_->insert_or_assign(&r, EbType::set_of(want));
        if (op == BinaryOp::Subset) want = EbType::set_of(want);
        auto a = check(l, want);
        if (!a) return std::nullopt;
        if (*a != want) {
          report("TYPE010", l,
                 std::string("left operand of '") + op_spelling(op) +
                     "' must be " + want.to_string() + ", found " +
                     a->to_string());
          return std::nullopt;
        }
        return EbType::boolean();
      }
      if (op == BinaryOp::Subset) {
        auto [a, b] = pair(l, r, std::nullopt);
        if (!a || !b) return std::nullopt;
        if (!a->is_set() || *a != *b) {
          report("TYPE010", e,
                 "operands of '<:' must be sets of one type, found " +
                     a->to_string() + " and " + b->to_string());
          return std::nullopt;
        }
        return EbType::boolean();
      }
      std::optional<EbType> a, b;
      if (l.kind == ExprKind::EmptySet) {
        b = check(r, std::nullopt);
        a = check(l, b && b->is_set() ? std::optional<EbType>(b->element())
                                      : std::nullopt);
      } else {
        a = check(l, std::nullopt);
        b = check(r, a ? std::optional<EbType>(EbType::set_of(*a))
                       : std::nullopt);
      }
      if (!a || !b) return std::nullopt;
      if (!b->is_set() || b->element() != *a) {
        report("TYPE010", e,
               "membership needs an element of " + b->to_string() +
                   ", found " + a->to_string());
        return std::nullopt;
      }
      return EbType::boolean();
    }
    // union, intersection, difference
    auto [a, b] = pair(l, r, hint);
    if (!a || !b) return std::nullopt;
    if (!a->is_set() || *a != *b) {
      report("TYPE010", e,
             std::string("operands of '") + op_spelling(op) +
                 "' must be sets of one type, found " + a->to_string() +
                 " and " + b->to_string());
      return std::nullopt;
    }
    return a;
  }

  const EventBModel& m_;
  const TypeEnv& env_;
  std::string unit_;
  const std::string* event_;
  std::vector<Diagnostic>* diags_;
  ExprTypes* out_;
};

void check_predicate(const LabeledPredicate& p, const EventBModel& m,
                     const TypeEnv& env, const std::string& unit,
                     const std::string* event, std::vector<Diagnostic>& out) {
  Checker c(m, env, unit, event, &out, nullptr);
  auto t = c.check(*p.predicate, EbType::boolean());
  if (t && *t != EbType::boolean())
    out.push_back({Severity::Error, "TYPE012", unit, p.predicate->pos,
                   "'" + p.label + "' is not a predicate (type " +
                       t->to_string() + ")"});
}

void check_event(const EventAst& ev, const EventBModel& m, const TypeEnv& env,
                 const std::string& unit, std::vector<Diagnostic>& out) {
  for (const auto& g : ev.guards) check_predicate(g, m, env, unit, &ev.name, out);
  for (const auto& a : ev.actions) {
    const EbType* target = env.lookup(a.target);
    if (!target) continue;
    if (a.rhs->kind == ExprKind::EmptySet && !target->is_set()) {
      out.push_back({Severity::Error, "TYPE011", unit, a.rhs->pos,
                     "action '" + a.label + "' assigns a set to " + a.target +
                         " of type " + target->to_string()});
      continue;
    }
    Checker c(m, env, unit, &ev.name, &out, nullptr);
    auto t = c.check(*a.rhs, *target);
    if (t && *t != *target)
      out.push_back({Severity::Error, "TYPE011", unit, a.rhs->pos,
                     "action '" + a.label + "' assigns " + t->to_string() +
                         " to " + a.target + " of type " +
                         target->to_string()});
  }
}

}  // namespace

TypeInference infer_types(const EventBModel& model) {
  return Inferrer(model).run();
}

std::vector<Diagnostic> check_wellformed(const EventBModel& model,
                                         const TypeEnv& env) {
  std::vector<Diagnostic> out;
  for (const auto& ctx : model.contexts)
    for (const auto& ax : ctx.axioms)
      check_predicate(ax, model, env, unit_of(ctx.source, ctx.name), nullptr,
                      out);
  const std::string munit = unit_of(model.machine.source, model.machine.name);
  for (const auto& inv : model.machine.invariants)
    check_predicate(inv, model, env, munit, nullptr, out);
  check_event(model.machine.initialisation, model, env, munit, out);
  for (const auto& ev : model.machine.events)
    check_event(ev, model, env, munit, out);
  return out;
}

ExprTypes annotate_types(const Expr& e, const EventBModel& model,
                         const TypeEnv& env, const std::string* event,
                         const std::optional<EbType>& hint) {
  ExprTypes out;
  Checker(model, env, {}, event, nullptr, &out).check(e, hint);
  return out;
}

}  // namespace eb2dbc
