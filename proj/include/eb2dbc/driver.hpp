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

#ifndef EB2DBC_DRIVER_HPP_
#define EB2DBC_DRIVER_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "eb2dbc/animator.hpp"
#include "eb2dbc/ast.hpp"
#include "eb2dbc/bindings.hpp"
#include "eb2dbc/emitter.hpp"
#include "eb2dbc/typing.hpp"
#include "eb2dbc/value.hpp"

namespace eb2dbc {

namespace fs = std::filesystem;

struct Inputs {
  fs::path machine;
  std::vector<fs::path> contexts;
  /// Where to look for contexts named in `sees` but not passed explicitly.
  std::vector<fs::path> search_dirs;
  std::optional<fs::path> bindings;
  int param_bound = 5;
};

/// Errors: Io.
std::string read_file(const fs::path& path);

/// Parses `.ebm`/`.ebc` sources or reads `.bum`/`.buc` Rodin files, then
/// links. Explicit context paths win over search-directory lookups.
EventBModel load_model(const Inputs& in);

struct Session {
  EventBModel model;
  TypeEnv env;
  Interpretation interp;
};

/// load_model, infer_types, check_wellformed, make_interpretation. Returns
/// nothing, with `diags` filled, when the model is ill typed.
std::optional<Session> load_session(const Inputs& in,
                                    std::vector<Diagnostic>& diags);

/// Writes every unit into `out` through a temporary directory, so a failed
/// run leaves prior contents alone. Returns the written file names.
/// Errors: Io.
std::vector<std::string> write_translation(const Translation& t,
                                           const fs::path& out);

/// Per class: file, routines, attributes, require/ensure/invariant clauses.
std::string summary_table(const Translation& t);

struct ScriptStep {
  Step step;
  int line = 0;
};

/// Lines `Event` or `Event(arg, ...)`; `#` and `//` start comments.
/// Arguments use binding syntax (`3`, `true`, `red`, `{1, 2}`).
/// Errors: Parse, BadBinding.
std::vector<ScriptStep> parse_script(std::string_view text, const Session& s,
                                     const std::string& unit = {});

/// `error CODE unit:line:col message`, optionally coloured.
std::string format_error(const Error& e, bool color);
std::string format_diagnostic(const Diagnostic& d, bool color);

/// Colour is on unless EB2DBC_COLOR=0 or stderr is not a terminal.
bool color_enabled();

}  // namespace eb2dbc

#endif  // EB2DBC_DRIVER_HPP_
