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

// eb2dbc: Event-B to Eiffel translator and animator.
//
//   eb2dbc translate m0.ebm c0.ebc --bindings d2.bind --out gen
//   eb2dbc check m0.ebm c0.ebc --bindings d2.bind --max-depth 10
//   eb2dbc animate m0.ebm c0.ebc --bindings d2.bind --script steps.txt
//
// Exit status: 0 success, 1 model errors or findings, 2 usage or I/O
// failures and state-space overflow.

#include <iostream>

#include <CLI11.hpp>

#include "eb2dbc/driver.hpp"

namespace {

using namespace eb2dbc;

constexpr int kOk = 0;
constexpr int kFindings = 1;
constexpr int kFatal = 2;

struct Common {
  std::vector<std::string> files;
  std::string bindings;
  std::vector<std::string> search_dirs;
  int param_bound = 5;

  Inputs inputs() const {
    Inputs in;
    in.machine = files.front();
    for (std::size_t i = 1; i < files.size(); ++i) in.contexts.push_back(files[i]);
    for (const auto& d : search_dirs) in.search_dirs.push_back(d);
    if (!bindings.empty()) in.bindings = fs::path(bindings);
    in.param_bound = param_bound;
    return in;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("files", c.files,
                  "Machine file (.ebm or .bum) followed by context files")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--bindings", c.bindings, "Constants-binding file (key=value)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--search-dir", c.search_dirs,
                  "Directory searched for contexts named in 'sees'");
}

int exit_code_of(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Io:
    case ErrorKind::StateSpaceExceeded:
      return kFatal;
    default:
      return kFindings;
  }
}

std::optional<Session> session_or_report(const Common& c, bool color) {
  std::vector<Diagnostic> diags;
  auto s = load_session(c.inputs(), diags);
  for (const auto& d : diags) std::cerr << format_diagnostic(d, color) << "\n";
  return s;
}

int run_translate(const Common& c, const std::string& out, bool bare,
                  bool color) {
  auto s = session_or_report(c, color);
  if (!s) return kFindings;
  const Translation t = translate(s->model, s->env, s->interp, EmitOptions{bare});
  const auto written = write_translation(t, out);
  std::cout << summary_table(t);
  std::cout << "wrote";
  for (const auto& n : written) std::cout << " " << n;
  std::cout << " to " << out << "\n";
  return kOk;
}

int run_check(const Common& c, const ExploreOptions& opts,
              const std::string& format, bool color) {
  auto s = session_or_report(c, color);
  if (!s) return kFindings;
  const Translation t = translate(s->model, s->env, s->interp);
  const ReachabilityReport r =
      check_contract_equivalence(s->model, s->env, s->interp, t.machine, opts);
  if (format == "records")
    std::cout << format_report_records(r, s->model, s->interp);
  else
    std::cout << format_report_text(r, s->model, s->interp);
  return r.clean() ? kOk : kFindings;
}

int run_animate(const Common& c, const std::string& script, bool color) {
  auto s = session_or_report(c, color);
  if (!s) return kFindings;
  const auto steps = parse_script(read_file(script), *s, script);
  SimState state = init_state(s->model, s->interp);
  std::cout << "init: " << s->interp.format(state) << "\n";
  for (const auto& st : steps) {
    const EventAst& ev = find_event(s->model, st.step.event);
    try {
      state = fire(s->model, state, s->interp, ev, st.step.args);
    } catch (Error& e) {
      throw Error(e.kind(), e.what(), {st.line, 1}, script)
          .with_subject(e.subject())
          .with_detail(e.detail());
    }
    std::cout << format_step(st.step, s->model, s->interp) << ": "
              << s->interp.format(state) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Translate Event-B models to Eiffel classes with contracts"};
  app.require_subcommand(1);

  Common common;
  std::string out;
  bool bare = false;
  auto* translate_cmd =
      app.add_subcommand("translate", "Write Eiffel classes for a model");
  add_common(translate_cmd, common);
  translate_cmd->add_option("--out", out, "Output directory")->required();
  translate_cmd->add_flag("--bare-constants", bare,
                          "Write constants as `d` instead of `ctx.d`");

  ExploreOptions opts;
  std::string format = "text";
  auto* check_cmd = app.add_subcommand(
      "check", "Explore the model and compare the contracts with it");
  add_common(check_cmd, common);
  check_cmd->add_option("--param-bound", common.param_bound,
                        "Integer parameters range over [-N, N]")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  check_cmd->add_option("--max-depth", opts.max_depth, "Firings from the initial state")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  check_cmd->add_option("--state-cap", opts.state_cap, "Most states to visit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  check_cmd->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "records"}))
      ->capture_default_str();
  check_cmd->add_option("--jobs", opts.jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string script;
  auto* animate_cmd =
      app.add_subcommand("animate", "Replay a sequence of events");
  add_common(animate_cmd, common);
  animate_cmd->add_option("--script", script, "One event per line")
      ->required()
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kFatal;
  }

  const bool color = color_enabled();
  try {
    if (*translate_cmd) return run_translate(common, out, bare, color);
    if (*check_cmd) return run_check(common, opts, format, color);
    return run_animate(common, script, color);
  } catch (const Error& e) {
    std::cerr << format_error(e, color) << "\n";
    return exit_code_of(e);
  } catch (const std::exception& e) {
    std::cerr << "error IO001 " << e.what() << "\n";
    return kFatal;
  }
}
