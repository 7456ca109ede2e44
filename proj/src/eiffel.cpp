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

#include "eb2dbc/eiffel.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <sstream>
#include <string_view>

namespace eb2dbc {

namespace {

std::shared_ptr<EExpr> make(EKind k) {
  auto e = std::make_shared<EExpr>();
  e->kind = k;
  return e;
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

EExprPtr EExpr::int_lit(std::int64_t v) {
  auto e = make(EKind::IntLit);
  e->int_value = v;
  return e;
}

EExprPtr EExpr::bool_lit(bool v) {
  auto e = make(EKind::BoolLit);
  e->bool_value = v;
  return e;
}

EExprPtr EExpr::attribute(std::string name, std::string source) {
  auto e = make(EKind::Attribute);
  e->name = std::move(name);
  e->source = std::move(source);
  return e;
}

EExprPtr EExpr::constant(std::string name, std::string source, bool qualified) {
  auto e = make(EKind::Constant);
  e->name = std::move(name);
  e->source = std::move(source);
  e->qualified = qualified;
  return e;
}

EExprPtr EExpr::argument(std::string name, std::string source) {
  auto e = make(EKind::Argument);
  e->name = std::move(name);
  e->source = std::move(source);
  return e;
}

EExprPtr EExpr::local(std::string name, std::string source) {
  auto e = make(EKind::Local);
  e->name = std::move(name);
  e->source = std::move(source);
  return e;
}

EExprPtr EExpr::cursor(std::string name) {
  auto e = make(EKind::Cursor);
  e->name = std::move(name);
  return e;
}

EExprPtr EExpr::old(EExprPtr inner) {
  auto e = make(EKind::Old);
  e->children = {std::move(inner)};
  return e;
}

EExprPtr EExpr::unary(EUnOp op, EExprPtr operand) {
  auto e = make(EKind::Unary);
  e->unop = op;
  e->children = {std::move(operand)};
  return e;
}

EExprPtr EExpr::binary(EBinOp op, EExprPtr l, EExprPtr r) {
  auto e = make(EKind::Binary);
  e->binop = op;
  e->children = {std::move(l), std::move(r)};
  return e;
}

EExprPtr EExpr::call(EExprPtr receiver, std::string feature,
                     std::vector<EExprPtr> args) {
  auto e = make(EKind::Call);
  e->name = std::move(feature);
  e->children.push_back(std::move(receiver));
  for (auto& a : args) e->children.push_back(std::move(a));
  return e;
}

EExprPtr EExpr::set_literal(std::string elem_type, std::vector<EExprPtr> elems) {
  auto e = make(EKind::SetLiteral);
  e->elem_type = std::move(elem_type);
  e->children = std::move(elems);
  return e;
}

EExprPtr EExpr::across(EExprPtr domain, std::string cursor, EExprPtr body) {
  auto e = make(EKind::Across);
  e->name = std::move(cursor);
  e->children = {std::move(domain), std::move(body)};
  return e;
}

const char* op_spelling(EBinOp op) {
  switch (op) {
    case EBinOp::Add: return "+";
    case EBinOp::Sub: return "-";
    case EBinOp::Mul: return "*";
    case EBinOp::IntDiv: return "//";
    case EBinOp::Mod: return "\\\\";
    case EBinOp::Eq: return "=";
    case EBinOp::Neq: return "/=";
    case EBinOp::Lt: return "<";
    case EBinOp::Le: return "<=";
    case EBinOp::Gt: return ">";
    case EBinOp::Ge: return ">=";
    case EBinOp::And: return "and";
    case EBinOp::Or: return "or";
    case EBinOp::Implies: return "implies";
  }
  return "?";
}

namespace {

constexpr int kPrimary = 12;
constexpr int kUnary = 11;
constexpr int kRelational = 6;
constexpr int kImplies = 3;

int level(EBinOp op) {
  switch (op) {
    case EBinOp::Mul:
    case EBinOp::IntDiv:
    case EBinOp::Mod: return 9;
    case EBinOp::Add:
    case EBinOp::Sub: return 8;
    case EBinOp::And: return 5;
    case EBinOp::Or: return 4;
    case EBinOp::Implies: return kImplies;
    default: return kRelational;
  }
}

int level(const EExpr& e) {
  switch (e.kind) {
    case EKind::IntLit: return e.int_value < 0 ? kUnary : kPrimary;
    case EKind::Old:
    case EKind::Unary: return kUnary;
    case EKind::Binary: return level(e.binop);
    case EKind::SetLiteral: return 1;
    default: return kPrimary;
  }
}

std::string wrap(const EExpr& e, bool parens) {
  std::string s = render_expr(e);
  return parens ? "(" + s + ")" : s;
}

}  // namespace

std::string render_expr(const EExpr& e) {
  switch (e.kind) {
    case EKind::IntLit: return std::to_string(e.int_value);
    case EKind::BoolLit: return e.bool_value ? "True" : "False";
    case EKind::Attribute:
    case EKind::Argument:
    case EKind::Local: return e.name;
    case EKind::Constant: return e.qualified ? "ctx." + e.name : e.name;
    case EKind::Cursor: return e.name + ".item";
    case EKind::Old: {
      const EExpr& c = *e.children[0];
      return "old " + wrap(c, level(c) < kPrimary);
    }
    case EKind::Unary: {
      const EExpr& c = *e.children[0];
      if (e.unop == EUnOp::Not) return "not " + wrap(c, level(c) < kUnary);
      // `--` would open a comment
      return "-" + wrap(c, level(c) <= kUnary);
    }
    case EKind::Binary: {
      const int p = level(e.binop);
      const EExpr& l = *e.children[0];
      const EExpr& r = *e.children[1];
      const int lp = level(l);
      const int rp = level(r);
      const bool nested = p == kRelational || p == kImplies;
      return wrap(l, lp < p || (lp == p && nested)) + " " +
             op_spelling(e.binop) + " " + wrap(r, rp <= p);
    }
    case EKind::Call: {
      const EExpr& recv = *e.children[0];
      std::string out = wrap(recv, level(recv) < kPrimary) + "." + e.name;
      if (e.children.size() > 1) {
        out += " (";
        for (std::size_t i = 1; i < e.children.size(); ++i)
          out += (i > 1 ? ", " : "") + render_expr(*e.children[i]);
        out += ")";
      }
      return out;
    }
    case EKind::SetLiteral: {
      std::string out = "create {EBSET [" + e.elem_type + "]}";
      if (e.children.empty()) return out + ".make_empty";
      out += ".make_from_array (<<";
      for (std::size_t i = 0; i < e.children.size(); ++i)
        out += (i ? ", " : "") + render_expr(*e.children[i]);
      return out + ">>)";
    }
    case EKind::Across: {
      const EExpr& d = *e.children[0];
      return "across " + wrap(d, level(d) < kPrimary) + " as " + e.name +
             " all " + render_expr(*e.children[1]) + " end";
    }
  }
  return "?";
}

EStmt EStmt::assign(EExprPtr target, EExprPtr value) {
  EStmt s;
  s.kind = Kind::Assign;
  s.target = std::move(target);
  s.value = std::move(value);
  return s;
}

EStmt EStmt::assign_from(EExprPtr target, EExprPtr value) {
  EStmt s;
  s.kind = Kind::AssignFrom;
  s.target = std::move(target);
  s.value = std::move(value);
  return s;
}

EStmt EStmt::create_ctx() {
  EStmt s;
  s.kind = Kind::CreateCtx;
  return s;
}

EStmt EStmt::create_empty(EExprPtr target) {
  EStmt s;
  s.kind = Kind::CreateEmpty;
  s.target = std::move(target);
  return s;
}

EStmt EStmt::raw(std::string text) {
  EStmt s;
  s.kind = Kind::Raw;
  s.text = std::move(text);
  return s;
}

std::string render_stmt(const EStmt& s) {
  switch (s.kind) {
    case EStmt::Kind::Assign:
      return render_expr(*s.target) + " := " + render_expr(*s.value);
    case EStmt::Kind::AssignFrom:
      return render_expr(*s.target) + ".assign_from (" +
             render_expr(*s.value) + ")";
    case EStmt::Kind::CreateCtx: return "create ctx";
    case EStmt::Kind::CreateEmpty:
      return "create " + render_expr(*s.target) + ".make_empty";
    case EStmt::Kind::Raw: return s.text;
  }
  return {};
}

std::string Assertion::text() const {
  const std::string body = expr ? render_expr(*expr) : raw;
  return tag.empty() ? body : tag + ": " + body;
}

std::string EiffelUnit::file_name() const { return lower(name) + ".e"; }

const FeatureGroup* EiffelUnit::group(const std::string& c) const {
  for (const auto& g : groups)
    if (g.comment == c) return &g;
  return nullptr;
}

const EiffelFeature* EiffelUnit::feature(const std::string& n) const {
  for (const auto& g : groups)
    for (const auto& f : g.features)
      if (f.name == n) return &f;
  return nullptr;
}

std::size_t EiffelUnit::feature_count() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.features.size();
  return n;
}

namespace {

class Writer {
 public:
  void line(int indent, const std::string& text) {
    // multi-line raw text keeps its relative indentation
    std::size_t start = 0;
    for (;;) {
      const auto nl = text.find('\n', start);
      const std::string part = text.substr(start, nl - start);
      if (part.empty())
        out_ << '\n';
      else
        out_ << std::string(indent, ' ') << part << '\n';
      if (nl == std::string::npos) break;
      start = nl + 1;
    }
  }
  void blank() { out_ << '\n'; }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

void render_assertions(Writer& w, const char* keyword,
                       const std::vector<Assertion>& clauses) {
  if (clauses.empty()) return;
  w.line(4, keyword);
  for (const auto& a : clauses) w.line(6, a.text());
}

void render_feature(Writer& w, const EiffelFeature& f) {
  std::string head = f.name;
  if (!f.formals.empty()) {
    head += " (";
    for (std::size_t i = 0; i < f.formals.size(); ++i)
      head += (i ? "; " : "") + f.formals[i].name + ": " + f.formals[i].type;
    head += ")";
  }
  if (!f.type.empty()) head += ": " + f.type;
  w.line(2, head);
  if (!f.comment.empty()) w.line(6, "-- " + f.comment);
  if (f.kind == EiffelFeature::Kind::Attribute) return;

  render_assertions(w, "require", f.require);
  if (!f.locals.empty()) {
    w.line(4, "local");
    for (const auto& l : f.locals) w.line(6, l.name + ": " + l.type);
  }
  w.line(4, f.is_once() ? "once" : "do");
  for (const auto& s : f.body) w.line(6, render_stmt(s));
  render_assertions(w, "ensure", f.ensure);
  w.line(4, "end");
}

}  // namespace

std::string render(const EiffelUnit& unit) {
  Writer w;
  std::string head = "class " + unit.name;
  if (!unit.generics.empty()) {
    head += " [";
    for (std::size_t i = 0; i < unit.generics.size(); ++i)
      head += (i ? ", " : "") + unit.generics[i];
    head += "]";
  }
  w.line(0, head);
  if (!unit.comment.empty()) w.line(4, "-- " + unit.comment);
  w.blank();

  if (!unit.parents.empty()) {
    w.line(0, "inherit");
    for (const auto& p : unit.parents) {
      w.line(2, p.type);
      if (p.redefines.empty()) continue;
      w.line(4, "redefine");
      for (std::size_t i = 0; i < p.redefines.size(); ++i)
        w.line(6, p.redefines[i] + (i + 1 < p.redefines.size() ? "," : ""));
      w.line(4, "end");
    }
    w.blank();
  }

  if (!unit.creators.empty()) {
    w.line(0, "create");
    for (std::size_t i = 0; i < unit.creators.size(); ++i)
      w.line(2, unit.creators[i] + (i + 1 < unit.creators.size() ? "," : ""));
    w.blank();
  }

  for (const auto& g : unit.groups) {
    std::string head = "feature";
    if (!g.clients.empty()) head += " {" + g.clients + "}";
    if (!g.comment.empty()) head += " -- " + g.comment;
    w.line(0, head);
    w.blank();
    for (const auto& f : g.features) {
      render_feature(w, f);
      w.blank();
    }
  }

  if (!unit.invariants.empty()) {
    w.line(0, "invariant");
    for (const auto& a : unit.invariants) w.line(2, a.text());
    w.blank();
  }
  w.line(0, "end");
  return w.str();
}

namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

std::vector<std::string> check_rendered(const std::string& text) {
  std::vector<std::string> problems;
  if (text.empty() || text.back() != '\n')
    problems.push_back("missing trailing newline");
  if (text.find('\t') != std::string::npos) problems.push_back("contains a tab");
  if (text.find(" \n") != std::string::npos)
    problems.push_back("trailing whitespace");

  static const std::set<std::string> openers = {
      "class", "do", "once", "across", "if", "from", "inspect",
      "redefine", "check", "debug"};
  int depth = 0;
  int line_no = 1;
  std::vector<std::pair<char, int>> brackets;
  int manifest = 0;
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (c == '\n') {
      ++line_no;
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '"' || c == '\'') {
      const char q = c;
      ++i;
      while (i < text.size() && text[i] != q && text[i] != '\n') {
        if (text[i] == '%') ++i;
        ++i;
      }
      if (i >= text.size() || text[i] != q)
        problems.push_back("line " + std::to_string(line_no) +
                           ": unterminated literal");
      ++i;
      continue;
    }
    if (is_word_char(c)) {
      std::size_t j = i;
      while (j < text.size() && is_word_char(text[j])) ++j;
      const std::string word = text.substr(i, j - i);
      if (openers.count(word)) ++depth;
      if (word == "end" && --depth < 0) {
        problems.push_back("line " + std::to_string(line_no) +
                           ": 'end' without an opening keyword");
        depth = 0;
      }
      i = j;
      continue;
    }
    if (c == '<' && i + 1 < text.size() && text[i + 1] == '<') {
      ++manifest;
      i += 2;
      continue;
    }
    if (c == '>' && i + 1 < text.size() && text[i + 1] == '>') {
      if (--manifest < 0) {
        problems.push_back("line " + std::to_string(line_no) + ": stray '>>'");
        manifest = 0;
      }
      i += 2;
      continue;
    }
    if (c == '(' || c == '[' || c == '{') brackets.emplace_back(c, line_no);
    if (c == ')' || c == ']' || c == '}') {
      const char want = c == ')' ? '(' : c == ']' ? '[' : '{';
      if (brackets.empty() || brackets.back().first != want)
        problems.push_back("line " + std::to_string(line_no) +
                           ": unbalanced '" + std::string(1, c) + "'");
      else
        brackets.pop_back();
    }
    ++i;
  }
  if (depth != 0)
    problems.push_back(std::to_string(depth) + " block(s) missing 'end'");
  if (manifest != 0) problems.push_back("unbalanced '<<'");
  for (const auto& [c, l] : brackets)
    problems.push_back("line " + std::to_string(l) + ": unclosed '" +
                       std::string(1, c) + "'");
  return problems;
}

std::vector<std::string> check_unit(const EiffelUnit& unit) {
  std::vector<std::string> problems;
  std::set<std::string> names;
  for (const auto& g : unit.groups)
    for (const auto& f : g.features)
      if (!names.insert(lower(f.name)).second)
        problems.push_back("feature '" + f.name + "' declared twice");

  std::set<std::string> redefined;
  for (const auto& p : unit.parents)
    for (const auto& r : p.redefines) redefined.insert(lower(r));
  for (const auto& c : unit.creators)
    if (!names.count(lower(c)) && !redefined.count(lower(c)))
      problems.push_back("creator '" + c + "' names no feature");

  auto unique_tags = [&](const std::vector<Assertion>& clauses,
                         const std::string& where) {
    std::set<std::string> seen;
    for (const auto& a : clauses)
      if (!a.tag.empty() && !seen.insert(lower(a.tag)).second)
        problems.push_back("tag '" + a.tag + "' repeated in " + where);
  };
  unique_tags(unit.invariants, "the class invariant");
  for (const auto& g : unit.groups)
    for (const auto& f : g.features) {
      unique_tags(f.require, "the precondition of " + f.name);
      unique_tags(f.ensure, "the postcondition of " + f.name);
      std::set<std::string> locals;
      for (const auto& a : f.formals)
        if (names.count(lower(a.name)) || !locals.insert(lower(a.name)).second)
          problems.push_back("argument '" + a.name + "' of " + f.name +
                             " clashes with another name");
      for (const auto& a : f.locals)
        if (names.count(lower(a.name)) || !locals.insert(lower(a.name)).second)
          problems.push_back("local '" + a.name + "' of " + f.name +
                             " clashes with another name");
    }
  return problems;
}

bool is_eiffel_reserved(const std::string& n) {
  static const std::set<std::string_view> words = {
      "across", "agent", "alias", "all", "and", "as", "assign", "attribute",
      "check", "class", "convert", "create", "current", "debug", "deferred",
      "do", "else", "elseif", "end", "ensure", "expanded", "export",
      "external", "false", "feature", "from", "frozen", "if", "implies",
      "inherit", "inspect", "invariant", "like", "local", "loop", "not",
      "note", "obsolete", "old", "once", "only", "or", "precursor",
      "redefine", "rename", "require", "rescue", "result", "retry", "select",
      "separate", "some", "then", "true", "tuple", "undefine", "until",
      "variant", "void", "when", "xor"};
  return words.count(lower(n)) != 0;
}

}  // namespace eb2dbc
