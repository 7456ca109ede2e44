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


#include "support.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "eb2dbc/bindings.hpp"
#include "eb2dbc/eval.hpp"
#include "eb2dbc/linker.hpp"
#include "eb2dbc/parser.hpp"
#include "eb2dbc/rodin.hpp"

namespace eb2dbc::testing {

std::filesystem::path data_dir() { return EB2DBC_TEST_DATA; }
std::filesystem::path cli_path() { return EB2DBC_CLI; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Built build_model(EventBModel model, const std::string& bindings,
                  int param_bound) {
  auto inf = infer_types(model);
  if (!inf.ok()) {
    std::string msg = "typing failed:";
    for (const auto& d : inf.diagnostics) msg += "\n  " + d.format();
    throw std::runtime_error(msg);
  }
  auto diags = check_wellformed(model, *inf.env);
  if (!diags.empty()) {
    std::string msg = "ill-formed:";
    for (const auto& d : diags) msg += "\n  " + d.format();
    throw std::runtime_error(msg);
  }
  Built b;
  b.interp = make_interpretation(model, *inf.env, parse_bindings(bindings),
                                 param_bound);
  b.env = std::move(*inf.env);
  b.model = std::move(model);
  return b;
}

Built build(const std::string& machine, const std::vector<std::string>& contexts,
            const std::string& bindings, int param_bound) {
  std::vector<ContextAst> ctxs;
  for (const auto& c : contexts) ctxs.push_back(parse_context_text(c));
  return build_model(link(parse_machine_text(machine), std::move(ctxs)),
                     bindings, param_bound);
}

Built cars(int d) {
  return build(slurp(data_dir() / "m0.ebm"), {slurp(data_dir() / "c0.ebc")},
               "d=" + std::to_string(d));
}

Built cars_from_rodin(int d) {
  RodinDocument m{"m0", slurp(data_dir() / "m0.bum"), "m0.bum"};
  RodinDocument c{"c0", slurp(data_dir() / "c0.buc"), "c0.buc"};
  return build_model(ingest_rodin(m, {c}), "d=" + std::to_string(d));
}

std::vector<std::string> eiffel_tokens(const std::string& text) {
  static const char* const kMulti[] = {":=", "<=", ">=", "/=", "//", "\\\\",
                                       "<<", ">>"};
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (text.compare(i, 2, "--") == 0) {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      out.push_back(text.substr(start, i - start));
      continue;
    }
    bool multi = false;
    for (const char* m : kMulti) {
      if (text.compare(i, 2, m) == 0) {
        out.emplace_back(m);
        i += 2;
        multi = true;
        break;
      }
    }
    if (!multi) out.emplace_back(1, text[i++]);
  }
  return out;
}

namespace {

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) { out_.seed = seed; }

  RandomModel run() {
    make_context();
    make_variables();
    std::ostringstream m;
    m << "machine mg" << (out_.seed % 1000);
    if (sees_) m << " sees cg";
    m << "\nvariables";
    for (const auto& v : out_.variables) m << ' ' << v;
    m << "\ninvariants\n";
    for (const auto& line : invariants()) m << "  " << line << '\n';
    m << "events\n";
    m << "  event INITIALISATION\n    then\n";
    for (const auto& line : init_actions()) m << "      " << line << '\n';
    m << "  end\n";
    const int n_events = pick(0, 3);
    for (int i = 0; i < n_events; ++i) m << event(i);
    m << "end\n";
    out_.machine = m.str();
    return out_;
  }

 private:
  int pick(int lo, int hi) {
    return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin(int percent) { return pick(1, 100) <= percent; }
  template <typename T>
  const T& one_of(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(pick(0, static_cast<int>(v.size()) - 1))];
  }

  void make_context() {
    std::ostringstream c, b;
    const int n_int = pick(0, 2);
    has_set_ = coin(40);
    has_flag_ = coin(30);
    sees_ = n_int > 0 || has_set_ || has_flag_ || coin(50);
    if (!sees_) return;
    for (int i = 1; i <= n_int; ++i) int_consts_.push_back("k" + std::to_string(i));
    c << "context cg\n";
    std::vector<std::string> consts = int_consts_;
    if (has_set_) consts.push_back("e0");
    if (has_flag_) consts.push_back("flag");
    if (!consts.empty()) {
      c << "constants";
      for (const auto& k : consts) c << ' ' << k;
      c << '\n';
    }
    if (has_set_) c << "sets S\n";
    int ax = 0;
    std::vector<std::string> axioms;
    for (const auto& k : int_consts_) {
      const int v = pick(1, 3);
      axioms.push_back("@axm" + std::to_string(++ax) + " " + k + " : NAT");
      if (coin(50))
        axioms.push_back("@axm" + std::to_string(++ax) + " " + k + " > 0");
      b << k << '=' << v << '\n';
    }
    if (has_set_) {
      axioms.push_back("@axm" + std::to_string(++ax) + " e0 : S");
      if (coin(50)) {
        b << "S={red, green}\ne0=green\n";
        carrier_size_ = 2;
      } else {
        carrier_size_ = pick(1, 3);
        b << "S=" << carrier_size_ << "\ne0=S1\n";
      }
    }
    if (has_flag_) {
      axioms.push_back("@axm" + std::to_string(++ax) + " flag : BOOL");
      b << "flag=" << (coin(50) ? "true" : "false") << '\n';
    }
    if (!axioms.empty()) {
      c << "axioms\n";
      for (const auto& a : axioms) c << "  " << a << '\n';
    }
    c << "end\n";
    out_.context = c.str();
    out_.bindings = b.str();
  }

  void make_variables() {
    const int n_int = pick(1, 3);
    for (int i = 1; i <= n_int; ++i) int_vars_.push_back("x" + std::to_string(i));
    if (coin(50)) bool_vars_.push_back("b1");
    if (coin(40)) set_vars_.push_back("r1");
    for (const auto& v : int_vars_) out_.variables.push_back(v);
    for (const auto& v : bool_vars_) out_.variables.push_back(v);
    for (const auto& v : set_vars_) out_.variables.push_back(v);
    set_of_s_ = has_set_ && coin(60);
  }

  std::string label(const char* stem, int& counter) {
    return std::string(stem) + std::to_string(++counter);
  }

  std::vector<std::string> invariants() {
    std::vector<std::string> typings;
    for (const auto& v : int_vars_) typings.push_back(v + (coin(60) ? " : NAT" : " : INT"));
    for (const auto& v : bool_vars_) typings.push_back(v + " : BOOL");
    for (const auto& v : set_vars_) {
      if (set_of_s_) typings.push_back(v + (coin(50) ? " <: S" : " : POW(S)"));
      else typings.push_back(v + (coin(50) ? " : POW(INT)" : " <: NAT"));
    }
    std::vector<std::string> lines;
    int n = 0;
    for (std::size_t i = 0; i < typings.size(); ++i) {
      std::string pred = typings[i];
      if (i + 1 < typings.size() && coin(25)) pred += " & " + typings[++i];
      const std::string l = label("inv", n);
      out_.invariant_labels.push_back(l);
      lines.push_back("@" + l + " " + pred);
    }
    const int extra = pick(0, 2);
    for (int i = 0; i < extra; ++i) {
      const std::string l = label("inv", n);
      out_.invariant_labels.push_back(l);
      lines.push_back("@" + l + " " + pred(2));
    }
    return lines;
  }

  std::vector<std::string> init_actions() {
    std::vector<std::string> lines;
    int n = 0;
    in_init_ = true;
    for (const auto& v : out_.variables) {
      const std::string l = label("act", n);
      out_.init_labels.push_back(l);
      lines.push_back("@" + l + " " + v + " := " + rhs_for(v, 1));
    }
    in_init_ = false;
    return lines;
  }

  std::string event(int index) {
    static const std::vector<std::string> stems = {"ML_out", "Tick", "step",
                                                   "MOVE", "Enter_Bridge"};
    const std::string name = one_of(stems) + "_" + std::to_string(index);
    int_params_.clear();
    carrier_params_.clear();
    bool_params_.clear();
    std::ostringstream e;
    e << "  event " << name << '\n';
    std::vector<std::string> guards;
    const int n_params = pick(0, 2);
    std::vector<std::string> params;
    for (int i = 1; i <= n_params; ++i) {
      const std::string p = "p" + std::to_string(i);
      params.push_back(p);
      const int kind = pick(0, has_set_ ? 3 : 2);
      if (kind == 0) {
        guards.push_back(p + " : INT");
        int_params_.push_back(p);
      } else if (kind == 1) {
        guards.push_back(p + " : NAT");
        int_params_.push_back(p);
      } else if (kind == 2) {
        guards.push_back(p + " : BOOL");
        bool_params_.push_back(p);
      } else {
        guards.push_back(p + " : S");
        carrier_params_.push_back(p);
      }
    }
    const int extra = pick(0, 2);
    for (int i = 0; i < extra; ++i) guards.push_back(pred(2));
    if (!params.empty()) {
      e << "    any";
      for (const auto& p : params) e << ' ' << p;
      e << '\n';
    }
    std::vector<std::string> guard_labels, action_labels;
    if (!guards.empty()) {
      e << "    where\n";
      int n = 0;
      for (const auto& g : guards) {
        const std::string l = label("grd", n);
        guard_labels.push_back(l);
        e << "      @" << l << ' ' << g << '\n';
      }
    }
    std::vector<std::string> targets = out_.variables;
    std::shuffle(targets.begin(), targets.end(), rng_);
    std::vector<std::pair<std::string, std::string>> actions;
    if (int_vars_.size() >= 2 && coin(25)) {
      actions.emplace_back(int_vars_[0], int_vars_[1]);
      actions.emplace_back(int_vars_[1], int_vars_[0]);
    } else {
      const int n_act = pick(coin(10) ? 0 : 1,
                             std::min<int>(3, static_cast<int>(targets.size())));
      for (int i = 0; i < n_act; ++i)
        actions.emplace_back(targets[static_cast<std::size_t>(i)],
                             rhs_for(targets[static_cast<std::size_t>(i)], 2));
    }
    if (!actions.empty()) {
      e << "    then\n";
      int n = 0;
      for (const auto& [t, rhs] : actions) {
        const std::string l = label("act", n);
        action_labels.push_back(l);
        e << "      @" << l << ' ' << t << " := " << rhs << '\n';
      }
    }
    e << "  end\n";
    out_.events.push_back({name, {guard_labels, action_labels}});
    int_params_.clear();
    carrier_params_.clear();
    bool_params_.clear();
    return e.str();
  }

  bool is_int_var(const std::string& v) const {
    return std::find(int_vars_.begin(), int_vars_.end(), v) != int_vars_.end();
  }
  bool is_bool_var(const std::string& v) const {
    return std::find(bool_vars_.begin(), bool_vars_.end(), v) != bool_vars_.end();
  }

  std::string rhs_for(const std::string& v, int depth) {
    if (is_int_var(v)) return int_expr(depth);
    if (is_bool_var(v)) return bool_expr();
    return set_expr(depth);
  }

  std::string int_expr(int depth) {
    std::vector<std::string> leaves = {std::to_string(pick(0, 3))};
    if (!in_init_)
      for (const auto& v : int_vars_) leaves.push_back(v);
    for (const auto& k : int_consts_) leaves.push_back(k);
    for (const auto& p : int_params_) leaves.push_back(p);
    if (depth <= 0 || coin(35)) return one_of(leaves);
    switch (pick(0, 6)) {
      case 0: return int_expr(depth - 1) + " + " + int_expr(depth - 1);
      case 1: return int_expr(depth - 1) + " - " + paren_int(depth - 1);
      case 2: return paren_int(depth - 1) + " * " + std::to_string(pick(0, 2));
      case 3: return paren_int(depth - 1) + " div " + std::to_string(pick(1, 3));
      case 4: return paren_int(depth - 1) + " mod " + std::to_string(pick(1, 3));
      case 5: return "-" + one_of(leaves);
      default: return one_of(leaves);
    }
  }
  std::string paren_int(int depth) {
    std::string e = int_expr(depth);
    return e.find(' ') == std::string::npos ? e : "(" + e + ")";
  }

  std::string bool_expr() {
    std::vector<std::string> leaves = {"TRUE", "FALSE"};
    if (!in_init_)
      for (const auto& v : bool_vars_) leaves.push_back(v);
    if (has_flag_) leaves.push_back("flag");
    for (const auto& p : bool_params_) leaves.push_back(p);
    return one_of(leaves);
  }

  std::string elem_expr() {
    if (set_of_s_) {
      std::vector<std::string> leaves = {"e0"};
      for (const auto& p : carrier_params_) leaves.push_back(p);
      return one_of(leaves);
    }
    return paren_int(0);
  }

  std::string set_expr(int depth) {
    std::vector<std::string> leaves = {"{}", "{" + elem_expr() + "}"};
    if (coin(30)) leaves.push_back("{" + elem_expr() + ", " + elem_expr() + "}");
    if (!in_init_)
      for (const auto& v : set_vars_) leaves.push_back(v);
    if (depth <= 0 || coin(40)) return one_of(leaves);
    static const char* const ops[] = {" \\/ ", " /\\ ", " \\ "};
    return "(" + set_expr(depth - 1) + ops[pick(0, 2)] + set_expr(depth - 1) + ")";
  }

  std::string pred(int depth) {
    if (depth <= 0 || coin(40)) return atom();
    switch (pick(0, 4)) {
      case 0: return "not(" + pred(depth - 1) + ")";
      case 1: return "(" + pred(depth - 1) + " & " + pred(depth - 1) + ")";
      case 2: return "(" + pred(depth - 1) + " or " + pred(depth - 1) + ")";
      case 3: return "(" + pred(depth - 1) + " => " + pred(depth - 1) + ")";
      default: return "(" + pred(depth - 1) + " <=> " + pred(depth - 1) + ")";
    }
  }

  std::string atom() {
    static const char* const rel[] = {" = ", " /= ", " < ", " <= ", " > ", " >= "};
    const int kind = pick(0, 5);
    if (kind == 1 && (!bool_vars_.empty() || has_flag_ || !bool_params_.empty()))
      return bool_expr() + " = " + bool_expr();
    if (kind == 2) return int_expr(1) + " : NAT";
    if (kind == 3 && !set_vars_.empty())
      return elem_expr() + " : " + set_expr(1);
    if (kind == 4 && !set_vars_.empty())
      return one_of(set_vars_) + (coin(50) ? " <: " : " = ") + set_expr(1);
    return int_expr(1) + rel[pick(0, 5)] + int_expr(1);
  }

  std::mt19937_64 rng_;
  RandomModel out_;
  bool sees_ = false;
  bool has_set_ = false;
  bool has_flag_ = false;
  bool set_of_s_ = false;
  bool in_init_ = false;
  int carrier_size_ = 0;
  std::vector<std::string> int_consts_;
  std::vector<std::string> int_vars_, bool_vars_, set_vars_;
  std::vector<std::string> int_params_, carrier_params_, bool_params_;
};

}  // namespace

RandomModel random_model(std::uint64_t seed) { return Generator(seed).run(); }

}  // namespace eb2dbc::testing
