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

#ifndef EB2DBC_ANIMATOR_HPP_
#define EB2DBC_ANIMATOR_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eb2dbc/ast.hpp"
#include "eb2dbc/eiffel.hpp"
#include "eb2dbc/typing.hpp"
#include "eb2dbc/value.hpp"

namespace eb2dbc {

/// Initial state: every initialisation action evaluated under the constants.
SimState init_state(const EventBModel& model, const Interpretation& interp);

/// Errors: Eval when no event has that name.
const EventAst& find_event(const EventBModel& model, const std::string& name);

bool enabled(const EventBModel& model, const SimState& state,
             const Interpretation& interp, const EventAst& event,
             const Args& args);

/// Simultaneous assignment: every right-hand side is evaluated in `state`.
/// Errors: NotEnabled (detail = label of the first false guard).
SimState fire(const EventBModel& model, const SimState& state,
              const Interpretation& interp, const EventAst& event,
              const Args& args);

/// Every argument tuple of an event within the interpretation's scope, in
/// parameter order with each range ascending.
/// Errors: UnsupportedParameter for set-typed parameters.
std::vector<Args> enumerate_args(const EventAst& event, const TypeEnv& env,
                                 const Interpretation& interp);

/// Where names are looked up when evaluating a translated contract.
struct ContractScope {
  const SimState* current = nullptr;
  const SimState* old = nullptr;  // read by `old` subexpressions
  const Args* args = nullptr;
  const std::map<std::string, Value>* locals = nullptr;
  const Interpretation* interp = nullptr;
};

/// Interprets a pre-render target expression.
Value eval_contract(const EExpr& e, const ContractScope& scope);

/// Runs a feature body on `state`, statement by statement.
SimState execute_body(const EiffelFeature& feature, const SimState& state,
                      const Args& args, const Interpretation& interp);

enum class FindingKind { InvariantViolation, Deadlock, Mismatch };

const char* finding_kind_name(FindingKind k);

struct Step {
  std::string event;
  Args args;
};

struct Finding {
  FindingKind kind = FindingKind::Mismatch;
  int depth = 0;
  SimState state;
  std::string event;  // empty for invariant findings and deadlocks
  Args args;
  std::string tag;    // invariant label or contract clause tag
  std::string side;   // require | ensure | body | invariant | feature
  std::string detail;
  std::vector<Step> trace;  // firings leading from the initial state
};

struct ReachabilityReport {
  std::size_t states_explored = 0;
  std::size_t transitions = 0;
  int depth_reached = 0;
  bool contracts_checked = false;
  std::vector<Finding> violations;
  std::vector<Finding> deadlocks;
  std::vector<Finding> mismatches;
  std::vector<SimState> states;  // visited states in breadth-first order

  bool clean() const { return violations.empty() && mismatches.empty(); }
};

struct ExploreOptions {
  int max_depth = 10;
  std::size_t state_cap = 100000;
  int jobs = 1;
};

inline constexpr std::size_t kDefaultStateCap = 100000;

/// Breadth-first over states reachable within `max_depth` firings.
/// Errors: StateSpaceExceeded once more than `state_cap` states are visited.
ReachabilityReport explore(const EventBModel& model, const TypeEnv& env,
                           const Interpretation& interp,
                           const ExploreOptions& opts = {});

/// explore, plus at every visited state, event and argument tuple: each
/// translated require clause agrees with the guard of the same label and
/// their conjunction with enabledness; when enabled, every ensure clause
/// holds between the state and its successor and running the body reaches
/// the same successor; every translated invariant clause agrees with its
/// source. Clauses missing from the translation are mismatches too.
ReachabilityReport check_contract_equivalence(const EventBModel& model,
                                              const TypeEnv& env,
                                              const Interpretation& interp,
                                              const EiffelUnit& machine,
                                              const ExploreOptions& opts = {});

/// `3 states explored, 0 invariant violations, 0 deadlocks, 0 mismatches`
/// followed by one line per finding.
std::string format_report_text(const ReachabilityReport& r,
                               const EventBModel& model,
                               const Interpretation& interp);

/// One JSON object per line: each finding, then a summary record.
std::string format_report_records(const ReachabilityReport& r,
                                  const EventBModel& model,
                                  const Interpretation& interp);

/// `ML_out`, `pick(3, TRUE)`
std::string format_step(const Step& s, const EventBModel& model,
                        const Interpretation& interp);

}  // namespace eb2dbc

#endif  // EB2DBC_ANIMATOR_HPP_
