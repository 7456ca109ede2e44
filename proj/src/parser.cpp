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

#include "eb2dbc/parser.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace eb2dbc {
namespace {

class Parser {
 public:
  explicit Parser(std::span<const Token> toks) : toks_(toks) {}

  MachineAst machine() {
    MachineAst m;
    m.pos = expect_keyword("machine").pos();
    m.name = expect_ident("machine name");
    if (at_keyword("refines"))
      throw Error(ErrorKind::UnsupportedElement,
                  "machine refinement is not supported", peek().pos())
          .with_subject("refines");
    if (accept_keyword("sees")) {
      m.sees.push_back(expect_ident("context name"));
      while (accept(TokenKind::Punctuation, ","))
        m.sees.push_back(expect_ident("context name"));
    }
    if (accept_keyword("variables")) {
      do {
        const Token& t = peek();
        auto name = expect_ident("variable name");
        if (contains(m.variables, name))
          fail_at(t, "duplicate variable '" + name + "'");
        m.variables.push_back(std::move(name));
      } while (at(TokenKind::Identifier));
    }
    if (accept_keyword("invariants")) {
      std::set<std::string> labels;
      while (at(TokenKind::LabelMarker))
        m.invariants.push_back(labeled_pred(labels, "invariant"));
    }
    expect_keyword("events");

    bool have_init = false;
    std::set<std::string> event_names;
    while (at_keyword("event")) {
      const Token& kw = peek();
      EventAst ev = event(m.variables);
      if (!event_names.insert(ev.name).second)
        fail_at(kw, "duplicate event '" + ev.name + "'");
      if (is_initialisation_name(ev.name)) {
        if (have_init) fail_at(kw, "duplicate initialisation event");
        if (!ev.params.empty() || !ev.guards.empty())
          fail_at(kw, "initialisation takes no parameters and no guards");
        have_init = true;
        m.initialisation = std::move(ev);
      } else {
        m.events.push_back(std::move(ev));
      }
    }
    expect_keyword("end");
    expect_eof();
    if (!have_init)
      throw Error(ErrorKind::MissingInitialisation,
                  "machine '" + m.name + "' has no INITIALISATION event",
                  m.pos)
          .with_subject(m.name);
    return m;
  }

  ContextAst context() {
    ContextAst c;
    c.pos = expect_keyword("context").pos();
    c.name = expect_ident("context name");
    std::set<std::string> names;
    auto declare = [&](std::vector<std::string>& into, const char* what) {
      do {
        const Token& t = peek();
        auto name = expect_ident(what);
        if (!names.insert(name).second)
          fail_at(t, "name '" + name + "' is declared twice");
        into.push_back(std::move(name));
      } while (at(TokenKind::Identifier));
    };
    if (accept_keyword("constants")) declare(c.constants, "constant name");
    if (accept_keyword("sets")) declare(c.sets, "carrier set name");
    if (accept_keyword("axioms")) {
      std::set<std::string> labels;
      while (at(TokenKind::LabelMarker))
        c.axioms.push_back(labeled_pred(labels, "axiom"));
    }
    expect_keyword("end");
    expect_eof();
    return c;
  }

  ExprPtr whole_expression() {
    auto e = expr();
    expect_eof();
    return e;
  }

  Assignment whole_assignment() {
    Assignment a;
    a.pos = peek().pos();
    a.target = expect_ident("assignment target");
    reject_nondeterministic();
    expect(TokenKind::Operator, ":=");
    a.rhs = expr();
    expect_eof();
    return a;
  }

 private:
  static bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  }

  EventAst event(const std::vector<std::string>& variables) {
    EventAst ev;
    ev.pos = expect_keyword("event").pos();
    ev.name = expect_ident("event name");
    if (at_keyword("refines"))
      throw Error(ErrorKind::UnsupportedElement,
                  "event refinement is not supported", peek().pos())
          .with_subject("refines");
    if (accept_keyword("any")) {
      do {
        const Token& t = peek();
        auto p = expect_ident("parameter name");
        if (contains(ev.params, p))
          fail_at(t, "duplicate parameter '" + p + "'");
        ev.params.push_back(std::move(p));
      } while (at(TokenKind::Identifier));
    }
    if (accept_keyword("where")) {
      std::set<std::string> labels;
      while (at(TokenKind::LabelMarker))
        ev.guards.push_back(labeled_pred(labels, "guard"));
    }
    if (accept_keyword("then")) {
      std::set<std::string> labels;
      std::set<std::string> targets;
      while (at(TokenKind::LabelMarker)) {
        LabeledAction act;
        act.pos = next().pos();
        const Token& lt = peek();
        act.label = expect_ident("action label");
        if (!labels.insert(act.label).second)
          fail_at(lt, "duplicate action label '" + act.label + "'");
        const Token& tt = peek();
        act.target = expect_ident("assignment target");
        if (!contains(variables, act.target))
          fail_at(tt, "action target '" + act.target +
                          "' is not a machine variable");
        if (!targets.insert(act.target).second)
          fail_at(tt, "variable '" + act.target +
                          "' is assigned twice in event '" + ev.name + "'");
        reject_nondeterministic();
        expect(TokenKind::Operator, ":=");
        act.rhs = expr();
        ev.actions.push_back(std::move(act));
      }
    }
    expect_keyword("end");
    return ev;
  }

  LabeledPredicate labeled_pred(std::set<std::string>& labels,
                                const char* what) {
    LabeledPredicate lp;
    lp.pos = next().pos();  // '@'
    const Token& t = peek();
    lp.label = expect_ident(std::string(what) + " label");
    if (!labels.insert(lp.label).second)
      fail_at(t, std::string("duplicate ") + what + " label '" + lp.label + "'");
    lp.predicate = expr();
    return lp;
  }

  void reject_nondeterministic() {
    if (at(TokenKind::Operator, "::") || at(TokenKind::Operator, ":|"))
      throw Error(ErrorKind::UnsupportedElement,
                  "non-deterministic assignment '" + peek().lexeme +
                      "' is not supported",
                  peek().pos())
          .with_subject("non-deterministic assignment");
  }

  // --- expressions, loosest binding first ---

  ExprPtr expr() { return equiv(); }

  ExprPtr equiv() {
    auto l = implies();
    while (at(TokenKind::Operator, "<=>")) {
      auto p = next().pos();
      l = Expr::binary_of(BinaryOp::Equiv, l, implies(), p);
    }
    return l;
  }

  ExprPtr implies() {
    auto l = disj();
    if (at(TokenKind::Operator, "=>")) {
      auto p = next().pos();
      return Expr::binary_of(BinaryOp::Implies, l, implies(), p);
    }
    return l;
  }

  ExprPtr disj() {
    auto l = conj();
    while (at_keyword("or")) {
      auto p = next().pos();
      l = Expr::binary_of(BinaryOp::Or, l, conj(), p);
    }
    return l;
  }

  ExprPtr conj() {
    auto l = negation();
    while (at(TokenKind::Operator, "&")) {
      auto p = next().pos();
      l = Expr::binary_of(BinaryOp::And, l, negation(), p);
    }
    return l;
  }

  ExprPtr negation() {
    if (at_keyword("not")) {
      auto p = next().pos();
      return Expr::unary_of(UnaryOp::Not, negation(), p);
    }
    return relation();
  }

  ExprPtr relation() {
    static const std::pair<const char*, BinaryOp> kRel[] = {
        {"=", BinaryOp::Eq},  {"/=", BinaryOp::Neq}, {"<", BinaryOp::Lt},
        {"<=", BinaryOp::Le}, {">", BinaryOp::Gt},   {">=", BinaryOp::Ge},
        {":", BinaryOp::In},  {"<:", BinaryOp::Subset},
    };
    auto l = set_union();
    for (const auto& [spelling, op] : kRel) {
      if (at(TokenKind::Operator, spelling)) {
        auto p = next().pos();
        return Expr::binary_of(op, l, set_union(), p);
      }
    }
    return l;
  }

  ExprPtr set_union() {
    auto l = set_inter();
    for (;;) {
      if (at(TokenKind::Operator, "\\/")) {
        auto p = next().pos();
        l = Expr::binary_of(BinaryOp::Union, l, set_inter(), p);
      } else if (at(TokenKind::Operator, "\\")) {
        auto p = next().pos();
        l = Expr::binary_of(BinaryOp::Diff, l, set_inter(), p);
      } else {
        return l;
      }
    }
  }

  ExprPtr set_inter() {
    auto l = additive();
    while (at(TokenKind::Operator, "/\\")) {
      auto p = next().pos();
      l = Expr::binary_of(BinaryOp::Inter, l, additive(), p);
    }
    return l;
  }

  ExprPtr additive() {
    auto l = multiplicative();
    for (;;) {
      if (at(TokenKind::Operator, "+")) {
        auto p = next().pos();
        l = Expr::binary_of(BinaryOp::Add, l, multiplicative(), p);
      } else if (at(TokenKind::Operator, "-")) {
        auto p = next().pos();
        l = Expr::binary_of(BinaryOp::Sub, l, multiplicative(), p);
      } else {
        return l;
      }
    }
  }

  ExprPtr multiplicative() {
    auto l = unary();
    for (;;) {
      BinaryOp op;
      if (at(TokenKind::Operator, "*"))
        op = BinaryOp::Mul;
      else if (at_keyword("div"))
        op = BinaryOp::Div;
      else if (at_keyword("mod"))
        op = BinaryOp::Mod;
      else
        return l;
      auto p = next().pos();
      l = Expr::binary_of(op, l, unary(), p);
    }
  }

  ExprPtr unary() {
    if (at(TokenKind::Operator, "-")) {
      auto p = next().pos();
      return Expr::unary_of(UnaryOp::Neg, unary(), p);
    }
    return atom();
  }

  ExprPtr atom() {
    const Token& t = peek();
    const SourcePos p = t.pos();
    if (at(TokenKind::IntegerLiteral)) {
      next();
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(t.spelling.data(),
                                       t.spelling.data() + t.spelling.size(), v);
      if (ec != std::errc()) fail_at(t, "integer literal out of range");
      return Expr::int_lit(v, p);
    }
    if (at(TokenKind::Identifier)) {
      next();
      return Expr::ident(t.spelling, p);
    }
    if (accept_keyword("TRUE")) return Expr::bool_lit(true, p);
    if (accept_keyword("FALSE")) return Expr::bool_lit(false, p);
    if (accept_keyword("NAT")) return Expr::type_atom(ExprKind::TypeNat, p);
    if (accept_keyword("INT")) return Expr::type_atom(ExprKind::TypeInt, p);
    if (accept_keyword("BOOL")) return Expr::type_atom(ExprKind::TypeBool, p);
    if (accept_keyword("POW")) {
      expect(TokenKind::Punctuation, "(");
      auto inner = expr();
      expect(TokenKind::Punctuation, ")");
      return Expr::pow(inner, p);
    }
    if (accept(TokenKind::Punctuation, "(")) {
      auto e = expr();
      expect(TokenKind::Punctuation, ")");
      return e;
    }
    if (accept(TokenKind::Punctuation, "{}")) return Expr::empty_set(p);
    if (accept(TokenKind::Punctuation, "{")) {
      if (accept(TokenKind::Punctuation, "}")) return Expr::empty_set(p);
      std::vector<ExprPtr> elems{expr()};
      while (accept(TokenKind::Punctuation, ",")) elems.push_back(expr());
      expect(TokenKind::Punctuation, "}");
      return Expr::set_enum(std::move(elems), p);
    }
    fail_expected({"expression"});
  }

  // --- token plumbing ---

  bool eof() const { return i_ >= toks_.size(); }

  const Token& peek() const {
    static const Token kEnd{TokenKind::Punctuation, "<end of input>",
                            "<end of input>", 1, 1};
    if (!eof()) return toks_[i_];
    return toks_.empty() ? kEnd : toks_.back();
  }

  const Token& next() {
    const Token& t = peek();
    if (!eof()) ++i_;
    return t;
  }

  bool at(TokenKind k) const { return !eof() && toks_[i_].kind == k; }
  bool at(TokenKind k, std::string_view s) const {
    return !eof() && toks_[i_].is(k, s);
  }
  bool at_keyword(std::string_view s) const { return at(TokenKind::Keyword, s); }

  bool accept(TokenKind k, std::string_view s) {
    if (!at(k, s)) return false;
    ++i_;
    return true;
  }
  bool accept_keyword(std::string_view s) {
    return accept(TokenKind::Keyword, s);
  }

  const Token& expect(TokenKind k, std::string_view s) {
    if (!at(k, s)) fail_expected({"'" + std::string(s) + "'"});
    return next();
  }
  const Token& expect_keyword(std::string_view s) {
    return expect(TokenKind::Keyword, s);
  }
  std::string expect_ident(const std::string& what) {
    if (!at(TokenKind::Identifier)) fail_expected({what});
    return next().spelling;
  }
  void expect_eof() {
    if (!eof()) fail_expected({"end of input"});
  }

  [[noreturn]] void fail_expected(std::vector<std::string> expected) {
    std::string msg = "expected ";
    for (std::size_t k = 0; k < expected.size(); ++k)
      msg += (k ? " or " : "") + expected[k];
    msg += eof() ? " at end of input" : ", found '" + peek().lexeme + "'";
    throw Error(ErrorKind::Parse, msg, peek().pos())
        .with_expected(std::move(expected));
  }

  [[noreturn]] void fail_at(const Token& t, const std::string& msg) {
    throw Error(ErrorKind::Parse, msg, t.pos()).with_subject(t.spelling);
  }

  std::span<const Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

MachineAst parse_machine(std::span<const Token> tokens) {
  return Parser(tokens).machine();
}

ContextAst parse_context(std::span<const Token> tokens) {
  return Parser(tokens).context();
}

ExprPtr parse_expression(std::span<const Token> tokens) {
  return Parser(tokens).whole_expression();
}

Assignment parse_assignment(std::span<const Token> tokens) {
  return Parser(tokens).whole_assignment();
}

MachineAst parse_machine_text(std::string_view text,
                              const std::string& source_name) {
  try {
    auto toks = lex(text);
    auto m = parse_machine(toks);
    m.source = source_name;
    return m;
  } catch (Error& e) {
    e.with_unit(source_name);
    throw;
  }
}

ContextAst parse_context_text(std::string_view text,
                              const std::string& source_name) {
  try {
    auto toks = lex(text);
    auto c = parse_context(toks);
    c.source = source_name;
    return c;
  } catch (Error& e) {
    e.with_unit(source_name);
    throw;
  }
}

}  // namespace eb2dbc
