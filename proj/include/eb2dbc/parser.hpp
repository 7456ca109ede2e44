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

#ifndef EB2DBC_PARSER_HPP_
#define EB2DBC_PARSER_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eb2dbc/ast.hpp"
#include "eb2dbc/lexer.hpp"

namespace eb2dbc {

// Recursive-descent parser for the surface syntax:
//
//   machine := "machine" id ["sees" id {"," id}] ["variables" id {id}]
//              ["invariants" {"@" id pred}] "events" {event} "end"
//   event   := "event" id ["any" id {id}] ["where" {"@" id pred}]
//              ["then" {"@" id id ":=" expr}] "end"
//   context := "context" id ["constants" id {id}] ["sets" id {id}]
//              ["axioms" {"@" id pred}] "end"
//
// Expression precedence, loosest first: <=>, =>, or, &, not,
// relations (= /= < <= > >= : <:), \/ and \, /\, + -, * div mod,
// unary minus, atoms. `=>` associates to the right, relations do not
// associate, everything else associates to the left.
//
// All entry points throw Error (Parse, MissingInitialisation, or
// UnsupportedElement for refinement and non-deterministic constructs).

MachineAst parse_machine(std::span<const Token> tokens);
ContextAst parse_context(std::span<const Token> tokens);

/// A whole token stream that must form one expression or predicate.
ExprPtr parse_expression(std::span<const Token> tokens);

/// `target := expr`, as stored in Rodin assignment attributes.
struct Assignment {
  std::string target;
  ExprPtr rhs;
  SourcePos pos;
};
Assignment parse_assignment(std::span<const Token> tokens);

/// lex + parse, tagging errors and the AST with `source_name`.
MachineAst parse_machine_text(std::string_view text,
                              const std::string& source_name = {});
ContextAst parse_context_text(std::string_view text,
                              const std::string& source_name = {});

}  // namespace eb2dbc

#endif  // EB2DBC_PARSER_HPP_
