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

#ifndef EB2DBC_LINKER_HPP_
#define EB2DBC_LINKER_HPP_

#include <vector>

#include "eb2dbc/ast.hpp"

namespace eb2dbc {

/// Resolves the machine's `sees` clause against `contexts` and builds the
/// symbol table. Contexts not named in `sees` are ignored; the linked model
/// keeps the seen ones in `sees` order and merges their constants and
/// carrier sets into one namespace.
///
/// Throws MissingContext, DuplicateDeclaration or UnresolvedIdentifier.
EventBModel link(MachineAst machine, std::vector<ContextAst> contexts);

}  // namespace eb2dbc

#endif  // EB2DBC_LINKER_HPP_
