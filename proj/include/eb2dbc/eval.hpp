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

#ifndef EB2DBC_EVAL_HPP_
#define EB2DBC_EVAL_HPP_

#include <cstdint>

#include "eb2dbc/ast.hpp"
#include "eb2dbc/bindings.hpp"
#include "eb2dbc/typing.hpp"
#include "eb2dbc/value.hpp"

namespace eb2dbc {

/// Evaluates a source expression or predicate.
///
/// Identifiers resolve to event arguments, then machine variables, then
/// constants. With `old_state`, machine variables are read from it instead
/// of `state` (the old-wrapped reading of an expression). Membership in a
/// type is decided by the value's shape: `x : INT` holds for every integer,
/// `x : NAT` iff x >= 0, `x : S` iff x is an element of carrier set S.
/// `div` and `mod` truncate toward zero; `mod` takes the dividend's sign.
///
/// Errors: EvalError on division by zero, overflow or an ill-typed operand;
/// MissingBinding when an unbound constant is read.
Value eval(const Expr& e, const EventBModel& model, const SimState& state,
           const Interpretation& interp, const Args* args = nullptr,
           const SimState* old_state = nullptr);

/// True iff `v` is a member of the type denoted by `type_expr`.
bool member_of_type(const Value& v, const Expr& type_expr,
                    const EventBModel& model, const Interpretation& interp);

/// All values of a type within the interpretation's finite scope: integers
/// in [-B, B], both booleans, every atom of a carrier set. Sets are not
/// enumerable (UnsupportedParameter).
std::vector<Value> enumerate_type(const EbType& t, const Interpretation& interp);

/// Checked integer arithmetic shared with the contract evaluator.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_div(std::int64_t a, std::int64_t b);
std::int64_t checked_mod(std::int64_t a, std::int64_t b);
std::int64_t checked_neg(std::int64_t a);

/// Builds the finite interpretation from a binding file. Carrier sets take
/// their elements from `S={a,b}` or `S=3` (elements S1..S3); an unbound
/// carrier set gets three elements. When `require_basic` is set, every
/// INT/BOOL constant must be bound.
///
/// Errors: BadBinding (unknown key, value of the wrong type, unknown element
/// name), MissingBinding, BindingViolatesAxioms (subject = first constant of
/// the axiom, detail = axiom label) for every axiom whose constants are all
/// bound.
Interpretation make_interpretation(const EventBModel& model,
                                   const TypeEnv& env,
                                   const ConstantBindings& bindings,
                                   int param_bound = 5,
                                   bool require_basic = true);

/// Converts a literal to a value of type `t`; `what` names the binding in
/// messages. Errors: BadBinding.
Value literal_value(const BindingLiteral& lit, const EbType& t,
                    const Interpretation& interp, const std::string& what,
                    int line = 0, const std::string& unit = {});

/// Number of elements an unbound carrier set receives.
inline constexpr int kDefaultCarrierSize = 3;

}  // namespace eb2dbc

#endif  // EB2DBC_EVAL_HPP_
