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


#ifndef EB2DBC_TESTS_SUPPORT_HPP_
#define EB2DBC_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "eb2dbc/ast.hpp"
#include "eb2dbc/eiffel.hpp"
#include "eb2dbc/typing.hpp"
#include "eb2dbc/value.hpp"

namespace eb2dbc::testing {

std::filesystem::path data_dir();
std::filesystem::path cli_path();
std::string slurp(const std::filesystem::path& p);

/// Parsed, linked, typed model plus its interpretation.
struct Built {
  EventBModel model;
  TypeEnv env;
  Interpretation interp;
};

/// Throws eb2dbc::Error on any front-end failure, and std::runtime_error
/// carrying the diagnostics when typing rejects the model.
Built build(const std::string& machine, const std::vector<std::string>& contexts,
            const std::string& bindings = {}, int param_bound = 5);
Built build_model(EventBModel model, const std::string& bindings,
                  int param_bound = 5);

/// Cars-on-bridge model from the test data directory with `d` bound.
Built cars(int d);
Built cars_from_rodin(int d);

/// Token stream of Eiffel text with `--` comments and whitespace dropped.
std::vector<std::string> eiffel_tokens(const std::string& text);

/// A random model in surface syntax, typed and within the supported subset.
struct RandomModel {
  std::uint64_t seed = 0;
  std::string machine;
  std::string context;   // empty when the machine sees nothing
  std::string bindings;
  std::vector<std::string> invariant_labels;
  /// event name -> (guard labels, action labels)
  std::vector<std::pair<std::string, std::pair<std::vector<std::string>,
                                               std::vector<std::string>>>>
      events;
  std::vector<std::string> init_labels;
  std::vector<std::string> variables;
};

RandomModel random_model(std::uint64_t seed);

/// Minimum number of generated models each property suite runs over.
inline constexpr int kPropertyCases = 200;

}  // namespace eb2dbc::testing

#endif  // EB2DBC_TESTS_SUPPORT_HPP_
