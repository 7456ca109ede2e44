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


// Acceptance checks for the cars-on-bridge model and the generated-model
// property suites. Prints one PASS/FAIL line per criterion.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "eb2dbc/animator.hpp"
#include "eb2dbc/emitter.hpp"
#include "eb2dbc/eval.hpp"
#include "eb2dbc/lexer.hpp"
#include "eb2dbc/linker.hpp"
#include "eb2dbc/parser.hpp"
#include "eb2dbc/rodin.hpp"
#include "support.hpp"

namespace {

using namespace eb2dbc;
namespace fs = std::filesystem;
using testing::Built;

struct Failure {
  std::string why;
};

void expect(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : " ") + s;
  return out;
}

void golden_machine(const Built& b) {
  auto u = translate_machine(b.model, b.env, {true});
  const auto got = testing::eiffel_tokens(render(u));
  const auto want = testing::eiffel_tokens(testing::slurp(testing::data_dir() / "golden/m0.e"));
  expect(got == want, "token stream differs:\n  got:  " + join(got) + "\n  want: " + join(want));
}

void golden_machine_via_cli() {
  const fs::path out = fs::temp_directory_path() /
                       ("eb2dbc-acceptance-" + std::to_string(::getpid()));
  const auto d = testing::data_dir();
  const std::string cmd = "'" + testing::cli_path().string() + "' translate '" +
                          (d / "m0.ebm").string() + "' '" + (d / "c0.ebc").string() +
                          "' --bindings '" + (d / "d2.bind").string() +
                          "' --bare-constants --out '" + out.string() + "' > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  std::string text;
  if (status == 0) text = testing::slurp(out / "m0.e");
  std::error_code ec;
  fs::remove_all(out, ec);
  expect(status == 0, "eb2dbc translate --bare-constants failed");
  expect(testing::eiffel_tokens(text) ==
             testing::eiffel_tokens(testing::slurp(d / "golden/m0.e")),
         "CLI output differs from golden file");
}

void constants_class(const Built& b) {
  auto u = translate_context(b.model, b.env, b.interp);
  expect(u.name == "CONSTANTS", "class is " + u.name);
  const auto* d = u.feature("d");
  expect(d && d->is_once() && d->type == "INTEGER", "no once-function d: INTEGER");
  expect(d->body.size() == 1 && render_stmt(d->body[0]) == "Result := 2",
         "d does not return 2");
  expect(u.invariants.size() == 2 && u.invariants[0].text() == "axm1: d >= 0" &&
             u.invariants[1].text() == "axm2: d > 0",
         "axiom clauses are not axm1: d >= 0, axm2: d > 0");
  expect(testing::eiffel_tokens(render(u)) ==
             testing::eiffel_tokens(testing::slurp(testing::data_dir() / "golden/constants.e")),
         "CONSTANTS token stream differs from golden file");
}

void semantic_oracle(const std::function<Built(int)>& make) {
  for (int d : {1, 2, 3, 5}) {
    Built b = make(d);
    auto t = translate(b.model, b.env, b.interp);
    ExploreOptions o;
    o.max_depth = 10;
    auto r = check_contract_equivalence(b.model, b.env, b.interp, t.machine, o);
    std::ostringstream why;
    why << "d=" << d << ": " << r.states_explored << " states, " << r.violations.size()
        << " violations, " << r.deadlocks.size() << " deadlocks, " << r.mismatches.size()
        << " mismatches";
    expect(r.states_explored == static_cast<std::size_t>(d + 1) && r.violations.empty() &&
               r.deadlocks.empty() && r.mismatches.empty(),
           why.str());
    for (const auto& s : r.states) {
      const auto n = s.at("n").as_int();
      expect(n >= 0 && n <= d, "state n=" + std::to_string(n) + " outside 0.." + std::to_string(d));
    }
  }
}

EiffelFeature& feature_of(EiffelUnit& u, const std::string& name) {
  for (auto& g : u.groups)
    for (auto& f : g.features)
      if (f.name == name) return f;
  throw Failure{"no feature " + name};
}

void mutations() {
  Built b = testing::cars(2);
  const auto base = translate(b.model, b.env, b.interp).machine;
  auto pe = [](const char* s) { return parse_expression(lex(s)); };
  ExploreOptions o;
  o.max_depth = 10;

  auto no_old = base;
  feature_of(no_old, "ml_out").ensure[0].expr =
      xi_expr(*pe("n = n + 1"), b.model, b.env, XiMode::Plain);
  auto r1 = check_contract_equivalence(b.model, b.env, b.interp, no_old, o);
  expect(!r1.mismatches.empty(), "ensure without old not detected");

  auto weak = base;
  feature_of(weak, "ml_out").require[0].expr =
      xi_expr(*pe("n <= d"), b.model, b.env, XiMode::Plain);
  auto r2 = check_contract_equivalence(b.model, b.env, b.interp, weak, o);
  expect(!r2.mismatches.empty(), "require <= instead of < not detected");

  auto dropped = base;
  dropped.invariants.pop_back();
  auto r3 = check_contract_equivalence(b.model, b.env, b.interp, dropped, o);
  expect(!r3.mismatches.empty() || !r3.violations.empty(), "dropped invariant not detected");
}

std::vector<std::string> tag_list(const std::vector<Assertion>& as) {
  std::vector<std::string> out;
  for (const auto& a : as) out.push_back(a.tag);
  return out;
}

void property_suites() {
  std::size_t firings = 0;
  for (int i = 0; i < testing::kPropertyCases; ++i) {
    const auto src = testing::random_model(7000 + static_cast<std::uint64_t>(i));
    const std::string where = "seed " + std::to_string(src.seed);
    std::vector<std::string> ctx;
    if (!src.context.empty()) ctx.push_back(src.context);
    Built b = testing::build(src.machine, ctx, src.bindings, 1);

    // totality
    Translation t;
    try {
      t = translate(b.model, b.env, b.interp);
    } catch (const Error& e) {
      throw Failure{where + ": translation failed: " + e.what()};
    }

    // tag preservation and structural counts
    const auto& m = b.model.machine;
    std::vector<std::string> inv;
    for (const auto& tag : tag_list(t.machine.invariants))
      if (tag.size() < 4 || tag.compare(tag.size() - 4, 4, "_nat") != 0) inv.push_back(tag);
    expect(inv == src.invariant_labels, where + ": invariant tags differ");
    const auto* events = t.machine.group("Events");
    expect((events ? events->features.size() : 0) == m.events.size(),
           where + ": event/feature count differs");
    std::size_t attrs = 0;
    for (const auto& f : t.machine.group("Access")->features) attrs += f.name != "ctx";
    expect(attrs == m.variables.size(), where + ": attribute count differs");
    for (std::size_t e = 0; e < m.events.size(); ++e) {
      const auto& f = events->features[e];
      expect(tag_list(f.require) == src.events[e].second.first, where + ": require tags differ");
      expect(tag_list(f.ensure) == src.events[e].second.second, where + ": ensure tags differ");
    }

    // render determinism
    auto again = translate(b.model, b.env, b.interp);
    auto u1 = t.units(), u2 = again.units();
    expect(u1.size() == u2.size(), where + ": unit count differs between runs");
    for (std::size_t k = 0; k < u1.size(); ++k)
      expect(render(*u1[k]) == render(*u2[k]), where + ": render differs between runs");

    // frame property and simultaneity
    ExploreOptions o;
    o.max_depth = 3;
    auto r = check_contract_equivalence(b.model, b.env, b.interp, t.machine, o);
    expect(r.mismatches.empty(), where + ": contract mismatch");
    for (const auto& s : r.states)
      for (const auto& ev : m.events)
        for (const auto& args : enumerate_args(ev, b.env, b.interp)) {
          if (!enabled(b.model, s, b.interp, ev, args)) continue;
          auto post = fire(b.model, s, b.interp, ev, args);
          auto want = s.vars;
          for (const auto& a : ev.actions)
            want[a.target] = eval(*a.rhs, b.model, s, b.interp, &args);
          expect(post.vars == want, where + ": firing " + ev.name + " broke the frame");
          ++firings;
        }
  }
  expect(firings > 0, "no firings exercised");

  Built sw = testing::build(
      "machine sw variables a c invariants @inv1 a : INT & c : INT events event "
      "INITIALISATION then @i1 a := 1 @i2 c := 2 end event swap then @act1 a := c "
      "@act2 c := a end end",
      {});
  auto s = fire(sw.model, init_state(sw.model, sw.interp), sw.interp,
                find_event(sw.model, "swap"), {});
  expect(s.at("a") == Value::integer(2) && s.at("c") == Value::integer(1), "swap is not simultaneous");
  auto tsw = translate(sw.model, sw.env, sw.interp);
  expect(execute_body(*tsw.machine.feature("swap"), init_state(sw.model, sw.interp), {},
                      sw.interp) == s,
         "translated swap body is not simultaneous");
}

void rodin_parity() {
  auto d = testing::data_dir();
  auto surface = link(parse_machine_text(testing::slurp(d / "m0.ebm")),
                      {parse_context_text(testing::slurp(d / "c0.ebc"))});
  auto rodin = ingest_rodin({"m0", testing::slurp(d / "m0.bum"), "m0.bum"},
                            {{"c0", testing::slurp(d / "c0.buc"), "c0.buc"}});
  expect(same_structure(surface, rodin), "Rodin model differs from surface parse");
  Built b = testing::cars_from_rodin(2);
  golden_machine(b);
  constants_class(b);
  semantic_oracle(testing::cars_from_rodin);
}

int run(int number, const std::string& title, const std::function<void()>& body) {
  try {
    body();
    std::cout << "PASS criterion " << number << ": " << title << "\n";
    return 0;
  } catch (const Failure& f) {
    std::cout << "FAIL criterion " << number << ": " << title << "\n  " << f.why << "\n";
  } catch (const std::exception& e) {
    std::cout << "FAIL criterion " << number << ": " << title << "\n  error: " << e.what()
              << "\n";
  }
  return 1;
}

}  // namespace

int main() {
  int failed = 0;
  failed += run(1, "golden machine class with bare constants", [] {
    golden_machine(testing::cars(2));
    golden_machine_via_cli();
  });
  failed += run(2, "CONSTANTS class for d=2", [] { constants_class(testing::cars(2)); });
  failed += run(3, "d+1 states and no findings for d in {1,2,3,5}",
                [] { semantic_oracle(testing::cars); });
  failed += run(4, "seeded mutations are detected", mutations);
  failed += run(5, "property suites over generated models", property_suites);
  failed += run(6, "Rodin input parity", rodin_parity);
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " failed\n"
                       : std::string("acceptance: all passed\n"));
  return failed ? 1 : 0;
}
