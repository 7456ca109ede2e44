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

#include "eb2dbc/linker.hpp"

#include <algorithm>

namespace eb2dbc {
namespace {

std::string unit_name(const std::string& source, const std::string& name) {
  return source.empty() ? name : source;
}

void declare(SymbolTable& table, Symbol sym, const std::string& unit) {
  if (const Symbol* prior = table.global(sym.name)) {
    throw Error(ErrorKind::DuplicateDeclaration,
                "'" + sym.name + "' is declared as a " +
                    symbol_kind_name(sym.kind) + " in '" + sym.owner +
                    "' and as a " + symbol_kind_name(prior->kind) + " in '" +
                    prior->owner + "'",
                sym.pos, unit)
        .with_subject(sym.name);
  }
  table.add_global(std::move(sym));
}

void resolve(const Expr& e, const SymbolTable& table, const std::string* event,
             const std::string& unit) {
  visit(e, [&](const Expr& n) {
    if (n.kind == ExprKind::Ident && !table.lookup(n.name, event))
      throw Error(ErrorKind::UnresolvedIdentifier,
                  "unresolved identifier '" + n.name + "'", n.pos, unit)
          .with_subject(n.name);
  });
}

void resolve_event(const EventAst& ev, const SymbolTable& table,
                   const std::string& unit) {
  for (const auto& g : ev.guards) resolve(*g.predicate, table, &ev.name, unit);
  for (const auto& a : ev.actions) resolve(*a.rhs, table, &ev.name, unit);
}

}  // namespace

EventBModel link(MachineAst machine, std::vector<ContextAst> contexts) {
  EventBModel model;
  const std::string munit = unit_name(machine.source, machine.name);

  for (const auto& seen : machine.sees) {
    auto it = std::find_if(contexts.begin(), contexts.end(),
                           [&](const ContextAst& c) { return c.name == seen; });
    if (it == contexts.end())
      throw Error(ErrorKind::MissingContext,
                  "machine '" + machine.name + "' sees unknown context '" +
                      seen + "'",
                  machine.pos, munit)
          .with_subject(seen);
    const bool twice =
        std::any_of(model.contexts.begin(), model.contexts.end(),
                    [&](const ContextAst& c) { return c.name == seen; });
    if (twice)
      throw Error(ErrorKind::DuplicateDeclaration,
                  "context '" + seen + "' is seen twice", machine.pos, munit)
          .with_subject(seen);
    model.contexts.push_back(*it);
  }

  for (const auto& ctx : model.contexts) {
    const std::string cunit = unit_name(ctx.source, ctx.name);
    for (const auto& s : ctx.sets)
      declare(model.symbols, {s, SymbolKind::CarrierSet, ctx.name, ctx.pos},
              cunit);
    for (const auto& c : ctx.constants)
      declare(model.symbols, {c, SymbolKind::Constant, ctx.name, ctx.pos},
              cunit);
  }
  for (const auto& v : machine.variables)
    declare(model.symbols, {v, SymbolKind::Variable, machine.name, machine.pos},
            munit);

  auto all_events = machine.events;
  all_events.insert(all_events.begin(), machine.initialisation);
  for (const auto& ev : all_events) {
    for (const auto& p : ev.params) {
      if (const Symbol* g = model.symbols.global(p))
        throw Error(ErrorKind::DuplicateDeclaration,
                    "parameter '" + p + "' of event '" + ev.name +
                        "' clashes with " + symbol_kind_name(g->kind) + " '" +
                        p + "'",
                    ev.pos, munit)
            .with_subject(p);
      model.symbols.add_param(ev.name, {p, SymbolKind::Parameter, ev.name, ev.pos});
    }
  }

  for (const auto& ctx : model.contexts)
    for (const auto& ax : ctx.axioms) {
      const std::string cunit = unit_name(ctx.source, ctx.name);
      // Axioms only see the constant namespace.
      visit(*ax.predicate, [&](const Expr& n) {
        if (n.kind != ExprKind::Ident) return;
        const Symbol* s = model.symbols.global(n.name);
        if (!s || s->kind == SymbolKind::Variable)
          throw Error(ErrorKind::UnresolvedIdentifier,
                      "unresolved identifier '" + n.name + "'", n.pos, cunit)
              .with_subject(n.name);
      });
    }
  for (const auto& inv : machine.invariants)
    resolve(*inv.predicate, model.symbols, nullptr, munit);
  for (const auto& ev : all_events) resolve_event(ev, model.symbols, munit);

  model.machine = std::move(machine);
  return model;
}

}  // namespace eb2dbc
