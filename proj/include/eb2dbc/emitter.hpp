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

#ifndef EB2DBC_EMITTER_HPP_
#define EB2DBC_EMITTER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "eb2dbc/ast.hpp"
#include "eb2dbc/eiffel.hpp"
#include "eb2dbc/typing.hpp"
#include "eb2dbc/value.hpp"

namespace eb2dbc {

enum class XiMode { Plain, OldWrapped };

struct EmitOptions {
  /// Write constants as `d` instead of `ctx.d` inside the machine class.
  bool bare_constants = false;
};

/// Translates one expression or predicate. `event` scopes parameter lookup;
/// `hint` is the type the context expects (needed for a bare `{}`).
/// Errors: UnsupportedExpr.
EExprPtr xi_expr(const Expr& e, const EventBModel& model, const TypeEnv& env,
                 XiMode mode, const std::string* event = nullptr,
                 const std::optional<EbType>& hint = std::nullopt,
                 const EmitOptions& opts = {});

/// `INTEGER`, `BOOLEAN`, `S`, `EBSET [T]`.
std::string type_text(const EbType& t);

/// Lower-cases and suffixes reserved words with `_`.
std::string mangle(const std::string& name);

EiffelFeature translate_event(const EventAst& ev, const EventBModel& model,
                              const TypeEnv& env, const EmitOptions& opts = {});

/// Errors: InitReadsState.
EiffelFeature translate_init(const EventAst& init, const EventBModel& model,
                             const TypeEnv& env, bool has_context,
                             const EmitOptions& opts = {});

/// Errors: DuplicateDeclaration when names collide after mangling.
EiffelUnit translate_machine(const EventBModel& model, const TypeEnv& env,
                             const EmitOptions& opts = {});

/// `interp` supplies the bound constant values (see make_interpretation,
/// which raises MissingBinding and BindingViolatesAxioms).
EiffelUnit translate_context(const EventBModel& model, const TypeEnv& env,
                             const Interpretation& interp);

/// One `S inherit EBSET [S_ELEM]` class and one empty `S_ELEM` class per
/// carrier set, in declaration order.
std::vector<EiffelUnit> translate_carrier_sets(const EventBModel& model);

/// The fixed EBSET [G] support class.
EiffelUnit emit_runtime();

/// Every unit of a model's translation.
struct Translation {
  EiffelUnit machine;
  std::optional<EiffelUnit> constants;  // present iff the machine sees a context
  std::vector<EiffelUnit> carriers;
  EiffelUnit runtime;

  std::vector<const EiffelUnit*> units() const;
};

/// Translates and self-checks every unit: renders are well formed, unit
/// invariants hold, and the machine only calls EBSET features that exist.
/// Errors: as the individual operations; UnsupportedExpr if a self-check
/// fails.
Translation translate(const EventBModel& model, const TypeEnv& env,
                      const Interpretation& interp, const EmitOptions& opts = {});

/// Set features called by `unit` that `runtime` does not declare.
std::vector<std::string> missing_set_features(const EiffelUnit& unit,
                                              const EiffelUnit& runtime);

}  // namespace eb2dbc

#endif  // EB2DBC_EMITTER_HPP_
