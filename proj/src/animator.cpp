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

#include "eb2dbc/animator.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "eb2dbc/eval.hpp"

namespace eb2dbc {

SimState init_state(const EventBModel& model, const Interpretation& interp) {
  const SimState empty;
  SimState s;
  for (const auto& a : model.machine.initialisation.actions)
    s.vars[a.target] = eval(*a.rhs, model, empty, interp);
  return s;
}

const EventAst& find_event(const EventBModel& model, const std::string& name) {
  if (is_initialisation_name(name)) return model.machine.initialisation;
  for (const auto& ev : model.machine.events)
    if (ev.name == name) return ev;
  throw Error(ErrorKind::Eval, "machine " + model.machine.name +
                                   " has no event '" + name + "'")
      .with_subject(name);
}

namespace {

const LabeledPredicate* first_false_guard(const EventBModel& model,
                                          const SimState& state,
                                          const Interpretation& interp,
                                          const EventAst& event,
                                          const Args& args) {
  for (const auto& g : event.guards)
    if (!eval(*g.predicate, model, state, interp, &args).as_bool()) return &g;
  return nullptr;
}

}  // namespace

bool enabled(const EventBModel& model, const SimState& state,
             const Interpretation& interp, const EventAst& event,
             const Args& args) {
  return first_false_guard(model, state, interp, event, args) == nullptr;
}

SimState fire(const EventBModel& model, const SimState& state,
              const Interpretation& interp, const EventAst& event,
              const Args& args) {
  if (const auto* g = first_false_guard(model, state, interp, event, args))
    throw Error(ErrorKind::NotEnabled,
                event.name + ": " + g->label + " not satisfied", g->pos)
        .with_subject(event.name)
        .with_detail(g->label);
  std::vector<std::pair<std::string, Value>> updates;
  for (const auto& a : event.actions)
    updates.emplace_back(a.target, eval(*a.rhs, model, state, interp, &args));
  SimState next = state;
  for (auto& [v, val] : updates) next.vars[v] = std::move(val);
  return next;
}

std::vector<Args> enumerate_args(const EventAst& event, const TypeEnv& env,
                                 const Interpretation& interp) {
  std::vector<Args> out{Args{}};
  for (const auto& p : event.params) {
    std::vector<Value> range;
    try {
      range = enumerate_type(env.at(p, &event.name), interp);
    } catch (Error& e) {
      throw Error(e.kind(), "parameter '" + p + "' of " + event.name + ": " +
                                e.what())
          .with_subject(p);
    }
    std::vector<Args> next;
    next.reserve(out.size() * range.size());
    for (const auto& partial : out)
      for (const auto& v : range) {
        Args a = partial;
        a[p] = v;
        next.push_back(std::move(a));
      }
    out = std::move(next);
  }
  return out;
}

namespace {

class ContractEvaluator {
 public:
  explicit ContractEvaluator(ContractScope scope) : scope_(scope) {}

  Value run(const EExpr& e) {
    switch (e.kind) {
      case EKind::IntLit: return Value::integer(e.int_value);
      case EKind::BoolLit: return Value::boolean(e.bool_value);
      case EKind::Attribute:
        if (!scope_.current)
          throw Error(ErrorKind::Eval, "no state to read '" + e.name + "' from");
        return scope_.current->at(e.source);
      case EKind::Constant: {
        auto it = scope_.interp->constants.find(e.source);
        if (it == scope_.interp->constants.end())
          throw Error(ErrorKind::MissingBinding,
                      "constant '" + e.source + "' has no binding")
              .with_subject(e.source);
        return it->second;
      }
      case EKind::Argument: return lookup(scope_.args, e.source, e.name);
      case EKind::Local: return lookup(scope_.locals, e.name, e.name);
      case EKind::Cursor: {
        auto it = cursors_.find(e.name);
        if (it == cursors_.end())
          throw Error(ErrorKind::Eval, "cursor '" + e.name + "' is not bound");
        return it->second;
      }
      case EKind::Old: {
        if (!scope_.old)
          throw Error(ErrorKind::Eval, "'old' used outside a postcondition");
        const SimState* saved = scope_.current;
        scope_.current = scope_.old;
        Value v = run(*e.children[0]);
        scope_.current = saved;
        return v;
      }
      case EKind::Unary: {
        const Value v = run(*e.children[0]);
        if (e.unop == EUnOp::Neg) return Value::integer(checked_neg(v.as_int()));
        return Value::boolean(!v.as_bool());
      }
      case EKind::Binary: return binary(e);
      case EKind::Call: return call(e);
      case EKind::SetLiteral: {
        std::vector<Value> elems;
        for (const auto& c : e.children) elems.push_back(run(*c));
        return Value::set(std::move(elems));
      }
      case EKind::Across: {
        const Value domain = run(*e.children[0]);
        const auto saved = cursors_;
        bool all = true;
        for (const auto& x : domain.elements()) {
          cursors_[e.name] = x;
          if (!run(*e.children[1]).as_bool()) {
            all = false;
            break;
          }
        }
        cursors_ = saved;
        return Value::boolean(all);
      }
    }
    throw Error(ErrorKind::Eval, "unknown target expression");
  }

 private:
  template <typename Map>
  static Value lookup(const Map* m, const std::string& key,
                      const std::string& shown) {
    if (m) {
      auto it = m->find(key);
      if (it != m->end()) return it->second;
    }
    throw Error(ErrorKind::Eval, "'" + shown + "' has no value").with_subject(shown);
  }

  Value binary(const EExpr& e) {
    const EExpr& l = *e.children[0];
    const EExpr& r = *e.children[1];
    switch (e.binop) {
      case EBinOp::And: return Value::boolean(run(l).as_bool() && run(r).as_bool());
      case EBinOp::Or: return Value::boolean(run(l).as_bool() || run(r).as_bool());
      case EBinOp::Implies:
        return Value::boolean(!run(l).as_bool() || run(r).as_bool());
      default: break;
    }
    const Value a = run(l);
    const Value b = run(r);
    switch (e.binop) {
      case EBinOp::Add: return Value::integer(checked_add(a.as_int(), b.as_int()));
      case EBinOp::Sub: return Value::integer(checked_sub(a.as_int(), b.as_int()));
      case EBinOp::Mul: return Value::integer(checked_mul(a.as_int(), b.as_int()));
      case EBinOp::IntDiv: return Value::integer(checked_div(a.as_int(), b.as_int()));
      case EBinOp::Mod: return Value::integer(checked_mod(a.as_int(), b.as_int()));
      case EBinOp::Eq: return Value::boolean(a == b);
      case EBinOp::Neq: return Value::boolean(a != b);
      case EBinOp::Lt: return Value::boolean(a.as_int() < b.as_int());
      case EBinOp::Le: return Value::boolean(a.as_int() <= b.as_int());
      case EBinOp::Gt: return Value::boolean(a.as_int() > b.as_int());
      case EBinOp::Ge: return Value::boolean(a.as_int() >= b.as_int());
      default: break;
    }
    throw Error(ErrorKind::Eval, "unexpected operator");
  }

  Value call(const EExpr& e) {
    const Value recv = run(*e.children[0]);
    auto arg = [&]() {
      if (e.children.size() != 2)
        throw Error(ErrorKind::Eval, "'" + e.name + "' takes one argument");
      return run(*e.children[1]);
    };
    if (e.name == "twin") return recv;
    if (e.name == "count")
      return Value::integer(static_cast<std::int64_t>(recv.elements().size()));
    if (e.name == "has") return Value::boolean(recv.contains(arg()));
    if (e.name == "is_subset") return Value::boolean(recv.is_subset_of(arg()));
    if (e.name == "is_equal") {
      const Value other = arg();
      recv.elements();
      return Value::boolean(recv == other);
    }
    if (e.name == "union") return recv.set_union(arg());
    if (e.name == "intersection") return recv.set_intersection(arg());
    if (e.name == "difference") return recv.set_difference(arg());
    throw Error(ErrorKind::Eval, "unknown feature '" + e.name + "'")
        .with_subject(e.name);
  }

  ContractScope scope_;
  std::map<std::string, Value> cursors_;
};

}  // namespace

Value eval_contract(const EExpr& e, const ContractScope& scope) {
  return ContractEvaluator(scope).run(e);
}

SimState execute_body(const EiffelFeature& feature, const SimState& state,
                      const Args& args, const Interpretation& interp) {
  SimState s = state;
  std::map<std::string, Value> locals;
  for (const auto& st : feature.body) {
    switch (st.kind) {
      case EStmt::Kind::Assign:
      case EStmt::Kind::AssignFrom: {
        ContractScope scope{&s, nullptr, &args, &locals, &interp};
        Value v = eval_contract(*st.value, scope);
        if (st.target->kind == EKind::Local)
          locals[st.target->name] = std::move(v);
        else
          s.vars[st.target->source] = std::move(v);
        break;
      }
      case EStmt::Kind::CreateEmpty:
        s.vars[st.target->source] = Value::set({});
        break;
      case EStmt::Kind::CreateCtx:
      case EStmt::Kind::Raw:
        break;
    }
  }
  return s;
}

const char* finding_kind_name(FindingKind k) {
  switch (k) {
    case FindingKind::InvariantViolation: return "violation";
    case FindingKind::Deadlock: return "deadlock";
    case FindingKind::Mismatch: return "mismatch";
  }
  return "?";
}

namespace {

struct Node {
  SimState state;
  int parent = -1;
  Step via;
  int depth = 0;
};

struct Outcome {
  std::vector<std::pair<Step, SimState>> successors;
  std::vector<Finding> findings;  // without depth, state and trace
  bool any_enabled = false;
};

// The translation side of the equivalence check, indexed once.
struct ContractIndex {
  const EiffelUnit* machine = nullptr;
  const EiffelFeature* init = nullptr;
  std::map<std::string, const EiffelFeature*> features;  // by source event
};

Finding make_mismatch(const std::string& event, const Args& args,
                 const std::string& tag, const std::string& side,
                 std::string detail) {
  Finding f;
  f.kind = FindingKind::Mismatch;
  f.event = event;
  f.args = args;
  f.tag = tag;
  f.side = side;
  f.detail = std::move(detail);
  return f;
}

// Evaluates a translated clause, turning a runtime error into a mismatch
// description instead of aborting the exploration.
std::optional<bool> clause_value(const Assertion& a, const ContractScope& scope,
                                 std::string& error) {
  try {
    return eval_contract(*a.expr, scope).as_bool();
  } catch (const Error& e) {
    error = std::string("evaluation failed: ") + e.what();
    return std::nullopt;
  }
}

std::string state_diff(const SimState& want, const SimState& got) {
  std::string out;
  for (const auto& [k, v] : want.vars) {
    auto it = got.vars.find(k);
    if (it == got.vars.end() || it->second != v)
      out += (out.empty() ? "" : ", ") + k + " should be " + v.to_string() +
             ", body gives " +
             (it == got.vars.end() ? std::string("nothing")
                                   : it->second.to_string());
  }
  return out;
}

void check_transition(const EventBModel& model, const Interpretation& interp,
                      const EventAst& ev, const EiffelFeature& f,
                      const SimState& s, const SimState& next, const Args& args,
                      std::vector<Finding>& out) {
  ContractScope post{&next, &s, &args, nullptr, &interp};
  for (const auto& clause : f.ensure) {
    std::string err;
    auto v = clause_value(clause, post, err);
    if (!v || !*v)
      out.push_back(make_mismatch(ev.name, args, clause.tag, "ensure",
                             v ? "postcondition is false after firing" : err));
  }
  try {
    const SimState body = execute_body(f, s, args, interp);
    if (body != next) {
      std::string tag;
      for (const auto& a : ev.actions)
        if (body.vars.count(a.target) == 0 ||
            body.vars.at(a.target) != next.vars.at(a.target)) {
          tag = a.label;
          break;
        }
      out.push_back(make_mismatch(ev.name, args, tag, "body", state_diff(next, body)));
    }
  } catch (const Error& e) {
    out.push_back(make_mismatch(ev.name, args, "", "body",
                           std::string("body raised: ") + e.what()));
  }
  (void)model;
}

Outcome expand(const EventBModel& model, const TypeEnv& env,
               const Interpretation& interp, const ContractIndex* contracts,
               const SimState& s) {
  Outcome out;
  for (const auto& ev : model.machine.events) {
    const EiffelFeature* f = nullptr;
    if (contracts) {
      auto it = contracts->features.find(ev.name);
      if (it != contracts->features.end()) f = it->second;
    }
    for (const auto& args : enumerate_args(ev, env, interp)) {
      std::map<std::string, bool> guard_values;
      bool on = true;
      for (const auto& g : ev.guards) {
        const bool v = eval(*g.predicate, model, s, interp, &args).as_bool();
        guard_values[g.label] = v;
        on = on && v;
      }
      if (f) {
        ContractScope pre{&s, nullptr, &args, nullptr, &interp};
        bool conj = true;
        bool tag_mismatch = false;
        for (const auto& clause : f->require) {
          std::string err;
          auto v = clause_value(clause, pre, err);
          conj = conj && v.value_or(false);
          auto it = guard_values.find(clause.source_label);
          if (!v) {
            out.findings.push_back(make_mismatch(ev.name, args, clause.tag, "require", err));
            tag_mismatch = true;
          } else if (it != guard_values.end() && it->second != *v) {
            out.findings.push_back(make_mismatch(
                ev.name, args, clause.tag, "require",
                std::string("guard is ") + (it->second ? "true" : "false") +
                    ", precondition clause is " + (*v ? "true" : "false")));
            tag_mismatch = true;
          }
        }
        if (conj != on && !tag_mismatch)
          out.findings.push_back(make_mismatch(
              ev.name, args, "", "require",
              std::string("event is ") + (on ? "enabled" : "disabled") +
                  " but the precondition is " + (conj ? "true" : "false")));
      }
      if (!on) continue;
      out.any_enabled = true;
      SimState next = fire(model, s, interp, ev, args);
      if (f) check_transition(model, interp, ev, *f, s, next, args, out.findings);
      out.successors.push_back({Step{ev.name, args}, std::move(next)});
    }
  }
  return out;
}

std::vector<Finding> check_invariants(const EventBModel& model,
                                      const Interpretation& interp,
                                      const ContractIndex* contracts,
                                      const SimState& s) {
  std::vector<Finding> out;
  std::map<std::string, bool> source;
  for (const auto& inv : model.machine.invariants) {
    const bool v = eval(*inv.predicate, model, s, interp).as_bool();
    source[inv.label] = v;
    if (!v) {
      Finding f;
      f.kind = FindingKind::InvariantViolation;
      f.tag = inv.label;
      f.side = "invariant";
      f.detail = "invariant " + inv.label + " is false";
      out.push_back(std::move(f));
    }
  }
  if (!contracts) return out;
  ContractScope scope{&s, nullptr, nullptr, nullptr, &interp};
  for (const auto& clause : contracts->machine->invariants) {
    std::string err;
    auto v = clause_value(clause, scope, err);
    bool want;
    if (auto it = source.find(clause.source_label); it != source.end()) {
      want = it->second;
    } else {
      // synthesized `v >= 0` stands for a NAT typing of the attribute
      const EExpr& attr = *clause.expr->children.at(0);
      want = s.at(attr.source).as_int() >= 0;
    }
    if (!v)
      out.push_back(make_mismatch("", {}, clause.tag, "invariant", err));
    else if (*v != want)
      out.push_back(make_mismatch("", {}, clause.tag, "invariant",
                             std::string("source is ") + (want ? "true" : "false") +
                                 ", class invariant clause is " +
                                 (*v ? "true" : "false")));
  }
  return out;
}

// Clauses and features the translation lacks, found without exploring.
std::vector<Finding> structural_findings(const EventBModel& model,
                                         const ContractIndex& c) {
  std::vector<Finding> out;
  auto labels = [](const std::vector<Assertion>& clauses) {
    std::set<std::string> s;
    for (const auto& a : clauses) s.insert(a.source_label);
    return s;
  };
  const auto invs = labels(c.machine->invariants);
  for (const auto& inv : model.machine.invariants)
    if (!invs.count(inv.label))
      out.push_back(make_mismatch("", {}, inv.label, "invariant",
                             "no class invariant clause for " + inv.label));
  auto events = model.machine.events;
  events.insert(events.begin(), model.machine.initialisation);
  for (const auto& ev : events) {
    const EiffelFeature* f = nullptr;
    if (is_initialisation_name(ev.name)) {
      f = c.init;
    } else if (auto it = c.features.find(ev.name); it != c.features.end()) {
      f = it->second;
    }
    if (!f) {
      out.push_back(make_mismatch(ev.name, {}, "", "feature",
                             "no feature translates event " + ev.name));
      continue;
    }
    const auto req = labels(f->require);
    for (const auto& g : ev.guards)
      if (!req.count(g.label))
        out.push_back(make_mismatch(ev.name, {}, g.label, "require",
                               "no precondition clause for " + g.label));
    const auto ens = labels(f->ensure);
    for (const auto& a : ev.actions)
      if (!ens.count(a.label))
        out.push_back(make_mismatch(ev.name, {}, a.label, "ensure",
                               "no postcondition clause for " + a.label));
  }
  return out;
}

std::vector<Step> trace_to(const std::vector<Node>& nodes, int id) {
  std::vector<Step> steps;
  for (int i = id; i >= 0 && nodes[i].parent >= 0; i = nodes[i].parent)
    steps.push_back(nodes[i].via);
  std::reverse(steps.begin(), steps.end());
  return steps;
}

ReachabilityReport run(const EventBModel& model, const TypeEnv& env,
                       const Interpretation& interp,
                       const ContractIndex* contracts,
                       const ExploreOptions& opts) {
  ReachabilityReport report;
  report.contracts_checked = contracts != nullptr;
  std::vector<Node> nodes;
  std::map<SimState, int> visited;

  auto place = [&](Finding f, int id) {
    f.depth = nodes[id].depth;
    f.state = nodes[id].state;
    f.trace = trace_to(nodes, id);
    switch (f.kind) {
      case FindingKind::InvariantViolation:
        report.violations.push_back(std::move(f));
        break;
      case FindingKind::Deadlock: report.deadlocks.push_back(std::move(f)); break;
      case FindingKind::Mismatch: report.mismatches.push_back(std::move(f)); break;
    }
  };
  auto admit = [&](SimState s, int parent, Step via, int depth) {
    if (visited.count(s)) return;
    if (visited.size() >= opts.state_cap)
      throw Error(ErrorKind::StateSpaceExceeded,
                  "more than " + std::to_string(opts.state_cap) +
                      " states reachable within depth " +
                      std::to_string(opts.max_depth))
          .with_subject(std::to_string(opts.state_cap));
    const int id = static_cast<int>(nodes.size());
    visited.emplace(s, id);
    nodes.push_back(Node{std::move(s), parent, std::move(via), depth});
  };

  const SimState s0 = init_state(model, interp);
  admit(s0, -1, Step{}, 0);

  if (contracts) {
    for (auto& f : structural_findings(model, *contracts)) place(std::move(f), 0);
    if (contracts->init) {
      const SimState empty;
      std::vector<Finding> init_findings;
      check_transition(model, interp, model.machine.initialisation,
                       *contracts->init, empty, s0, {}, init_findings);
      for (auto& f : init_findings) place(std::move(f), 0);
    }
  }

  std::vector<int> frontier{0};
  const int jobs = std::max(1, opts.jobs);
  while (!frontier.empty()) {
    struct Result {
      Outcome outcome;
      std::vector<Finding> invariant_findings;
    };
    std::vector<Result> results(frontier.size());
    auto work = [&](std::size_t i) {
      const SimState& s = nodes[frontier[i]].state;
      results[i].invariant_findings = check_invariants(model, interp, contracts, s);
      results[i].outcome = expand(model, env, interp, contracts, s);
    };
    if (jobs == 1 || frontier.size() < 2) {
      for (std::size_t i = 0; i < frontier.size(); ++i) work(i);
    } else {
      // nodes is not modified until every worker has joined
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
      for (int w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = static_cast<std::size_t>(w); i < frontier.size();
                 i += static_cast<std::size_t>(jobs))
              work(i);
          } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
          }
        });
      for (auto& t : pool) t.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }

    std::vector<int> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const int id = frontier[i];
      for (auto& f : results[i].invariant_findings) place(std::move(f), id);
      Outcome& o = results[i].outcome;
      for (auto& f : o.findings) place(std::move(f), id);
      if (!o.any_enabled) {
        Finding d;
        d.kind = FindingKind::Deadlock;
        d.detail = "no event is enabled";
        place(std::move(d), id);
      }
      report.transitions += o.successors.size();
      if (nodes[id].depth >= opts.max_depth) continue;
      for (auto& [step, s] : o.successors) {
        const std::size_t before = nodes.size();
        admit(std::move(s), id, std::move(step), nodes[id].depth + 1);
        if (nodes.size() > before) next.push_back(static_cast<int>(before));
      }
    }
    frontier = std::move(next);
  }

  report.states_explored = nodes.size();
  for (const auto& n : nodes) {
    report.depth_reached = std::max(report.depth_reached, n.depth);
    report.states.push_back(n.state);
  }
  auto order = [](const Finding& a, const Finding& b) {
    return std::tie(a.depth, a.state, a.event, a.args, a.side, a.tag) <
           std::tie(b.depth, b.state, b.event, b.args, b.side, b.tag);
  };
  std::stable_sort(report.violations.begin(), report.violations.end(), order);
  std::stable_sort(report.deadlocks.begin(), report.deadlocks.end(), order);
  std::stable_sort(report.mismatches.begin(), report.mismatches.end(), order);
  return report;
}

}  // namespace

ReachabilityReport explore(const EventBModel& model, const TypeEnv& env,
                           const Interpretation& interp,
                           const ExploreOptions& opts) {
  return run(model, env, interp, nullptr, opts);
}

ReachabilityReport check_contract_equivalence(const EventBModel& model,
                                              const TypeEnv& env,
                                              const Interpretation& interp,
                                              const EiffelUnit& machine,
                                              const ExploreOptions& opts) {
  ContractIndex index;
  index.machine = &machine;
  for (const auto& g : machine.groups)
    for (const auto& f : g.features) {
      if (f.kind != EiffelFeature::Kind::Procedure || f.source.empty()) continue;
      if (is_initialisation_name(f.source))
        index.init = &f;
      else
        index.features.emplace(f.source, &f);
    }
  return run(model, env, interp, &index, opts);
}

std::string format_step(const Step& s, const EventBModel& model,
                        const Interpretation& interp) {
  if (s.args.empty()) return s.event;
  std::vector<std::string> order;
  for (const auto& ev : model.machine.events)
    if (ev.name == s.event) order = ev.params;
  if (order.empty())
    for (const auto& [k, v] : s.args) order.push_back(k);
  std::string out = s.event + "(";
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto it = s.args.find(order[i]);
    out += (i ? ", " : "") +
           (it == s.args.end() ? std::string("?") : interp.format(it->second));
  }
  return out + ")";
}

std::string format_report_text(const ReachabilityReport& r,
                               const EventBModel& model,
                               const Interpretation& interp) {
  std::ostringstream out;
  out << r.states_explored << " states explored, " << r.violations.size()
      << " invariant violations, " << r.deadlocks.size() << " deadlocks, "
      << r.mismatches.size() << " mismatches\n";
  out << "depth reached " << r.depth_reached << ", " << r.transitions
      << " transitions\n";
  auto trace = [&](const Finding& f) {
    if (f.trace.empty()) return std::string("initial state");
    std::string t;
    for (const auto& s : f.trace)
      t += (t.empty() ? "" : ", ") + format_step(s, model, interp);
    return t;
  };
  for (const auto& f : r.violations)
    out << "violation " << f.tag << " at {" << interp.format(f.state)
        << "} after " << trace(f) << "\n";
  for (const auto& f : r.deadlocks)
    out << "deadlock at {" << interp.format(f.state) << "} after " << trace(f)
        << "\n";
  for (const auto& f : r.mismatches) {
    out << "mismatch " << f.side;
    if (!f.tag.empty()) out << " " << f.tag;
    if (!f.event.empty())
      out << " in " << format_step(Step{f.event, f.args}, model, interp);
    out << " at {" << interp.format(f.state) << "}: " << f.detail << "\n";
  }
  return out.str();
}

namespace {

nlohmann::json to_json(const Value& v, const Interpretation& interp) {
  switch (v.kind()) {
    case Value::Kind::Int: return v.as_int();
    case Value::Kind::Bool: return v.as_bool();
    case Value::Kind::Atom: return interp.format(v);
    case Value::Kind::Set: {
      auto arr = nlohmann::json::array();
      for (const auto& x : v.elements()) arr.push_back(to_json(x, interp));
      return arr;
    }
  }
  return nullptr;
}

}  // namespace

std::string format_report_records(const ReachabilityReport& r,
                                  const EventBModel& model,
                                  const Interpretation& interp) {
  std::string out;
  auto emit = [&](const Finding& f) {
    nlohmann::ordered_json j;
    j["kind"] = finding_kind_name(f.kind);
    nlohmann::ordered_json state = nlohmann::ordered_json::object();
    for (const auto& [k, v] : f.state.vars) state[k] = to_json(v, interp);
    j["state"] = state;
    j["event"] = f.event;
    nlohmann::ordered_json args = nlohmann::ordered_json::object();
    for (const auto& [k, v] : f.args) args[k] = to_json(v, interp);
    j["args"] = args;
    j["tag"] = f.tag;
    j["side"] = f.side;
    j["depth"] = f.depth;
    j["detail"] = f.detail;
    auto trace = nlohmann::ordered_json::array();
    for (const auto& s : f.trace) trace.push_back(format_step(s, model, interp));
    j["trace"] = trace;
    out += j.dump() + "\n";
  };
  for (const auto& f : r.violations) emit(f);
  for (const auto& f : r.deadlocks) emit(f);
  for (const auto& f : r.mismatches) emit(f);
  nlohmann::ordered_json summary;
  summary["kind"] = "summary";
  summary["states"] = r.states_explored;
  summary["transitions"] = r.transitions;
  summary["depth"] = r.depth_reached;
  summary["violations"] = r.violations.size();
  summary["deadlocks"] = r.deadlocks.size();
  summary["mismatches"] = r.mismatches.size();
  out += summary.dump() + "\n";
  return out;
}

}  // namespace eb2dbc
