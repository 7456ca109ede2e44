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

#include "eb2dbc/driver.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "eb2dbc/eval.hpp"
#include "eb2dbc/linker.hpp"
#include "eb2dbc/parser.hpp"
#include "eb2dbc/rodin.hpp"

namespace eb2dbc {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in || fs::is_directory(path))
    throw Error(ErrorKind::Io, "cannot read " + path.string(), {}, path.string())
        .with_subject(path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

bool is_rodin(const fs::path& p) {
  return p.extension() == ".bum" || p.extension() == ".buc";
}

ContextAst load_context(const fs::path& p) {
  const std::string text = read_file(p);
  if (is_rodin(p))
    return read_rodin_context({p.stem().string(), text, p.string()});
  return parse_context_text(text, p.string());
}

}  // namespace

EventBModel load_model(const Inputs& in) {
  const std::string text = read_file(in.machine);
  MachineAst m = is_rodin(in.machine)
                     ? read_rodin_machine({in.machine.stem().string(), text,
                                           in.machine.string()})
                     : parse_machine_text(text, in.machine.string());
  std::vector<ContextAst> contexts;
  for (const auto& p : in.contexts) contexts.push_back(load_context(p));
  for (const auto& seen : m.sees) {
    bool have = false;
    for (const auto& c : contexts) have = have || c.name == seen;
    if (have) continue;
    for (const auto& dir : in.search_dirs) {
      const fs::path surface = dir / (seen + ".ebc");
      const fs::path rodin = dir / (seen + ".buc");
      if (fs::exists(surface)) {
        contexts.push_back(load_context(surface));
        break;
      }
      if (fs::exists(rodin)) {
        contexts.push_back(load_context(rodin));
        break;
      }
    }
  }
  return link(std::move(m), std::move(contexts));
}

std::optional<Session> load_session(const Inputs& in,
                                    std::vector<Diagnostic>& diags) {
  EventBModel model = load_model(in);
  TypeInference ti = infer_types(model);
  diags = ti.diagnostics;
  if (!ti.ok()) return std::nullopt;
  auto wf = check_wellformed(model, *ti.env);
  if (!wf.empty()) {
    diags.insert(diags.end(), wf.begin(), wf.end());
    return std::nullopt;
  }
  ConstantBindings bindings;
  if (in.bindings)
    bindings = parse_bindings(read_file(*in.bindings), in.bindings->string());
  Interpretation interp =
      make_interpretation(model, *ti.env, bindings, in.param_bound);
  return Session{std::move(model), std::move(*ti.env), std::move(interp)};
}

std::vector<std::string> write_translation(const Translation& t,
                                           const fs::path& out) {
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec || !fs::is_directory(out))
    throw Error(ErrorKind::Io, "cannot create output directory " + out.string() +
                                   (ec ? ": " + ec.message() : ""),
                {}, out.string());

  std::random_device rd;
  const fs::path tmp =
      out / (".eb2dbc-tmp-" + std::to_string(::getpid()) + "-" +
             std::to_string(rd() % 100000));
  fs::create_directory(tmp, ec);
  if (ec)
    throw Error(ErrorKind::Io, "cannot write into " + out.string() + ": " +
                                   ec.message(),
                {}, out.string());

  std::vector<std::string> names;
  try {
    for (const EiffelUnit* u : t.units()) {
      const fs::path p = tmp / u->file_name();
      std::ofstream f(p, std::ios::binary);
      f << render(*u);
      f.close();
      if (!f) throw Error(ErrorKind::Io, "cannot write " + p.string());
      names.push_back(u->file_name());
    }
    for (const auto& n : names) {
      fs::rename(tmp / n, out / n, ec);
      if (ec)
        throw Error(ErrorKind::Io, "cannot move " + n + " into " +
                                       out.string() + ": " + ec.message());
    }
  } catch (...) {
    fs::remove_all(tmp, ec);
    throw;
  }
  fs::remove_all(tmp, ec);
  return names;
}

std::string summary_table(const Translation& t) {
  std::ostringstream out;
  out << std::left << std::setw(14) << "class" << std::setw(16) << "file"
      << std::right << std::setw(9) << "routines" << std::setw(11)
      << "attributes" << std::setw(9) << "require" << std::setw(8) << "ensure"
      << std::setw(11) << "invariant" << "\n";
  for (const EiffelUnit* u : t.units()) {
    std::size_t routines = 0, attributes = 0, req = 0, ens = 0;
    for (const auto& g : u->groups)
      for (const auto& f : g.features) {
        if (f.kind == EiffelFeature::Kind::Attribute)
          ++attributes;
        else
          ++routines;
        req += f.require.size();
        ens += f.ensure.size();
      }
    out << std::left << std::setw(14) << u->name << std::setw(16)
        << u->file_name() << std::right << std::setw(9) << routines
        << std::setw(11) << attributes << std::setw(9) << req << std::setw(8)
        << ens << std::setw(11) << u->invariants.size() << "\n";
  }
  const EiffelUnit& m = t.machine;
  std::size_t features = 0;
  for (const auto& g : m.groups)
    for (const auto& f : g.features)
      if (f.kind != EiffelFeature::Kind::Attribute) ++features;
  out << m.name << ": " << features << " features, " << m.invariants.size()
      << " invariant clauses\n";
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Splits on commas outside braces.
std::vector<std::string_view> split_args(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '{') ++depth;
    if (s[i] == '}') --depth;
    if (s[i] == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

}  // namespace

std::vector<ScriptStep> parse_script(std::string_view text, const Session& s,
                                     const std::string& unit) {
  std::vector<ScriptStep> steps;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    for (std::string_view marker : {"#", "//"})
      if (auto c = line.find(marker); c != std::string_view::npos)
        line = line.substr(0, c);
    line = trim(line);
    if (line.empty()) continue;

    std::string_view name = line;
    std::vector<std::string_view> raw_args;
    if (auto open = line.find('('); open != std::string_view::npos) {
      if (line.back() != ')')
        throw Error(ErrorKind::Parse, "expected ')' at end of step",
                    {line_no, static_cast<int>(line.size())}, unit);
      name = trim(line.substr(0, open));
      const auto inside = trim(line.substr(open + 1, line.size() - open - 2));
      if (!inside.empty()) raw_args = split_args(inside);
    }
    const std::string event(name);
    const EventAst* ev = nullptr;
    for (const auto& e : s.model.machine.events)
      if (e.name == event) ev = &e;
    if (!ev)
      throw Error(ErrorKind::Parse,
                  "machine " + s.model.machine.name + " has no event '" +
                      event + "'",
                  {line_no, 1}, unit)
          .with_subject(event);
    if (raw_args.size() != ev->params.size())
      throw Error(ErrorKind::Parse,
                  event + " takes " + std::to_string(ev->params.size()) +
                      " argument(s), found " + std::to_string(raw_args.size()),
                  {line_no, 1}, unit)
          .with_subject(event);
    ScriptStep step;
    step.line = line_no;
    step.step.event = event;
    for (std::size_t i = 0; i < raw_args.size(); ++i) {
      const std::string& p = ev->params[i];
      const auto lit = parse_literal(raw_args[i], line_no, unit);
      step.step.args[p] = literal_value(lit, s.env.at(p, &ev->name), s.interp,
                                        event + " argument " + p, line_no, unit);
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

namespace {

std::string where(const std::string& unit, const SourcePos& pos) {
  std::string w = unit.empty() ? "<input>" : unit;
  if (pos.known())
    w += ":" + std::to_string(pos.line) + ":" + std::to_string(pos.column);
  else if (pos.line > 0)
    w += ":" + std::to_string(pos.line);
  return w;
}

std::string label(bool color) {
  return color ? "\033[1;31merror\033[0m" : "error";
}

}  // namespace

std::string format_error(const Error& e, bool color) {
  std::string out = label(color) + " " + e.code() + " " + where(e.unit(), e.pos()) +
                    " " + e.what();
  if (!e.expected().empty()) {
    out += " (expected ";
    for (std::size_t i = 0; i < e.expected().size(); ++i)
      out += (i ? ", " : "") + e.expected()[i];
    out += ")";
  }
  return out;
}

std::string format_diagnostic(const Diagnostic& d, bool color) {
  const std::string sev = d.severity == Severity::Error ? label(color) : "warning";
  return sev + " " + d.code + " " + where(d.unit, d.pos) + " " + d.message;
}

bool color_enabled() {
  const char* env = std::getenv("EB2DBC_COLOR");
  if (env && std::string(env) == "0") return false;
  return ::isatty(STDERR_FILENO) != 0;
}

}  // namespace eb2dbc
