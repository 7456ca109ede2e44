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

#ifndef EB2DBC_PRINTER_HPP_
#define EB2DBC_PRINTER_HPP_

#include <string>

#include "eb2dbc/ast.hpp"

namespace eb2dbc {

// Debug printers back to the ASCII surface syntax. Output re-parses to a
// structurally identical AST; parentheses are inserted only where the
// grammar's precedence requires them.

std::string print_expr(const Expr& e);
std::string print_machine(const MachineAst& m);
std::string print_context(const ContextAst& c);

}  // namespace eb2dbc

#endif  // EB2DBC_PRINTER_HPP_
