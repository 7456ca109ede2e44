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

#ifndef EB2DBC_RODIN_HPP_
#define EB2DBC_RODIN_HPP_

#include <string>
#include <vector>

#include "eb2dbc/ast.hpp"

namespace eb2dbc {

/// One Rodin component file. Rodin stores the component name only in the
/// file name (`m0.bum`, `c0.buc`), so it travels alongside the XML text.
struct RodinDocument {
  std::string name;
  std::string xml;
  std::string source;  // path for diagnostics; defaults to `name`
};

/// Reads an unchecked Rodin machine file (`org.eventb.core.machineFile`).
/// Predicate and assignment attributes go through the surface expression
/// grammar, Unicode operators included. Empty labels become `inv_k`,
/// `grd_k`, `act_k` by 1-based position.
///
/// Throws Xml for malformed documents and UnsupportedElement for
/// refinement, witnesses, variants, extended events, and
/// non-deterministic or multiple assignments.
MachineAst read_rodin_machine(const RodinDocument& doc);

/// Reads an unchecked Rodin context file (`org.eventb.core.contextFile`).
/// Empty axiom labels become `axm_k`.
ContextAst read_rodin_context(const RodinDocument& doc);

/// read_rodin_machine + read_rodin_context + link.
EventBModel ingest_rodin(const RodinDocument& machine,
                         const std::vector<RodinDocument>& contexts);

}  // namespace eb2dbc

#endif  // EB2DBC_RODIN_HPP_
