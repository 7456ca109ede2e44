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


#include <gtest/gtest.h>

#include <limits>
#include <set>

#include "eb2dbc/animator.hpp"
#include "eb2dbc/bindings.hpp"
#include "eb2dbc/emitter.hpp"
#include "eb2dbc/eval.hpp"
#include "eb2dbc/lexer.hpp"
#include "eb2dbc/parser.hpp"
#include "support.hpp"

namespace eb2dbc {
namespace {

ExprPtr expr(const std::string& s) { return parse_expression(lex(s)); }

SimState n_is(std::int64_t n) { return SimState{{{"n", Value::integer(n)}}}; }

// Reachable values of n computed without the explorer: a plain walk over
// 0..d using only the guards of the model as written.
std::set<std::int64_t> cars_oracle(int d) {
  std::set<std::int64_t> seen{0};
  std::vector<std::int64_t> todo{0};
  while (!todo.empty()) {
    const auto n = todo.back();
    todo.pop_back();
    for (auto next : {n < d ? n + 1 : n, n > 0 ? n - 1 : n})
      if (seen.insert(next).second) todo.push_back(next);
  }
  return seen;
}

TEST(Eval, GuardOnSampleState) {
  auto b = testing::cars(2);
  EXPECT_TRUE(eval(*expr("n < d"), b.model, n_is(1), b.interp).as_bool());
  EXPECT_TRUE(eval(*expr("n : NAT"), b.model, n_is(0), b.interp).as_bool());
  EXPECT_FALSE(eval(*expr("n : NAT"), b.model, n_is(-1), b.interp).as_bool());
}

TEST(Eval, SetIdentities) {
  auto b = testing::cars(2);
  const auto s = n_is(0);
  auto v = [&](const char* e) { return eval(*expr(e), b.model, s, b.interp); };
  EXPECT_EQ(v("{1, 2} \\/ {2, 3}"), v("{3, 2, 1}"));
  EXPECT_EQ(v("{1, 2} /\\ {2, 3}"), v("{2}"));
  EXPECT_EQ(v("{1, 2} \\ {2, 3}"), v("{1}"));
  EXPECT_TRUE(v("{1} <: {1, 2}").as_bool());
  EXPECT_FALSE(v("{1, 5} <: {1, 2}").as_bool());
  EXPECT_TRUE(v("2 : {1, 2}").as_bool());
}

TEST(Eval, DivisionTruncatesTowardZero) {
  auto b = testing::cars(2);
  const auto s = n_is(0);
  auto v = [&](const char* e) { return eval(*expr(e), b.model, s, b.interp).as_int(); };
  EXPECT_EQ(v("7 div 2"), 3);
  EXPECT_EQ(v("-7 div 2"), -3);
  EXPECT_EQ(v("7 mod -2"), 1);
  EXPECT_EQ(v("-7 mod 2"), -1);
}

TEST(Eval, DivisionByZero) {
  auto b = testing::cars(2);
  try {
    eval(*expr("n div 0"), b.model, n_is(3), b.interp);
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Eval);
  }
  EXPECT_THROW(eval(*expr("n mod 0"), b.model, n_is(3), b.interp), Error);
}

TEST(Eval, OverflowIsAnError) {
  EXPECT_THROW(checked_add(std::numeric_limits<std::int64_t>::max(), 1), Error);
  EXPECT_THROW(checked_mul(std::numeric_limits<std::int64_t>::min(), -1), Error);
  EXPECT_THROW(checked_neg(std::numeric_limits<std::int64_t>::min()), Error);
  EXPECT_THROW(checked_div(std::numeric_limits<std::int64_t>::min(), -1), Error);
  EXPECT_EQ(checked_sub(5, 7), -2);
}

TEST(Eval, ShortCircuit) {
  auto b = testing::cars(2);
  EXPECT_FALSE(eval(*expr("n > 0 & 1 div n = 1"), b.model, n_is(0), b.interp).as_bool());
  EXPECT_TRUE(eval(*expr("n = 0 or 1 div n = 1"), b.model, n_is(0), b.interp).as_bool());
  EXPECT_TRUE(eval(*expr("n > 0 => 1 div n = 1"), b.model, n_is(0), b.interp).as_bool());
}

TEST(Eval, OldStateReads) {
  auto b = testing::cars(2);
  auto pre = n_is(1), post = n_is(2);
  // the evaluator reads variables from the old state when one is given
  EXPECT_EQ(eval(*expr("n + 1"), b.model, post, b.interp, nullptr, &pre).as_int(), 2);
}

TEST(InitState, CarsOnBridge) {
  auto b = testing::cars(2);
  EXPECT_EQ(init_state(b.model, b.interp), n_is(0));
}

TEST(InitState, EmptySet) {
  auto b = testing::build(
      "machine m variables r invariants @inv1 r : POW(INT) events event "
      "INITIALISATION then @a r := {} end end",
      {});
  SimState s = init_state(b.model, b.interp);
  EXPECT_EQ(s.at("r"), Value::set({}));
}

TEST(InitState, UnboundConstant) {
  auto b = testing::cars(2);
  b.interp.constants.clear();
  try {
    init_state(b.model, b.interp);
    SUCCEED();
  } catch (const Error& e) {
    FAIL() << "init of m0 reads no constant: " << e.what();
  }
  auto init = b.model;
  init.machine.initialisation.actions[0].rhs = expr("d");
  try {
    init_state(init, b.interp);
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingBinding);
    EXPECT_EQ(e.subject(), "d");
  }
}

TEST(Enabled, Boundaries) {
  auto b = testing::cars(2);
  const auto& out = find_event(b.model, "ML_out");
  const auto& in = find_event(b.model, "ML_in");
  EXPECT_FALSE(enabled(b.model, n_is(2), b.interp, out, {}));
  EXPECT_FALSE(enabled(b.model, n_is(0), b.interp, in, {}));
  for (auto n : cars_oracle(2)) {
    EXPECT_EQ(enabled(b.model, n_is(n), b.interp, out, {}), n < 2) << n;
    EXPECT_EQ(enabled(b.model, n_is(n), b.interp, in, {}), n > 0) << n;
  }
}

TEST(Fire, Increment) {
  auto b = testing::cars(2);
  EXPECT_EQ(fire(b.model, n_is(1), b.interp, find_event(b.model, "ML_out"), {}), n_is(2));
}

TEST(Fire, SwapIsSimultaneous) {
  auto b = testing::build(
      "machine sw variables a c invariants @inv1 a : INT & c : INT events event "
      "INITIALISATION then @i1 a := 1 @i2 c := 2 end event swap then @act1 a := c "
      "@act2 c := a end end",
      {});
  const SimState s{{{"a", Value::integer(1)}, {"c", Value::integer(2)}}};
  const SimState want{{{"a", Value::integer(2)}, {"c", Value::integer(1)}}};
  EXPECT_EQ(fire(b.model, s, b.interp, find_event(b.model, "swap"), {}), want);
  auto t = translate(b.model, b.env, b.interp);
  EXPECT_EQ(execute_body(*t.machine.feature("swap"), s, {}, b.interp), want);
}

TEST(Fire, NotEnabled) {
  auto b = testing::cars(2);
  try {
    fire(b.model, n_is(0), b.interp, find_event(b.model, "ML_in"), {});
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotEnabled);
    EXPECT_EQ(e.detail(), "grd1");
    EXPECT_NE(std::string(e.what()).find("grd1 not satisfied"), std::string::npos);
  }
}

TEST(Explore, CarsMatchesOracle) {
  for (int d : {1, 2, 3, 5}) {
    auto b = testing::cars(d);
    auto r = explore(b.model, b.env, b.interp);
    std::set<std::int64_t> got;
    for (const auto& s : r.states) got.insert(s.at("n").as_int());
    EXPECT_EQ(got, cars_oracle(d)) << d;
    EXPECT_EQ(r.states_explored, static_cast<std::size_t>(d + 1));
    EXPECT_TRUE(r.violations.empty());
    EXPECT_TRUE(r.deadlocks.empty());
  }
}

TEST(Explore, SeededViolation) {
  auto b = testing::build(
      "machine bad variables n invariants @inv1 n : INT @inv2 n <= 0 events event "
      "INITIALISATION then @act1 n := 0 end event up then @act1 n := n + 1 end end",
      {});
  ExploreOptions o;
  o.max_depth = 3;
  auto r = explore(b.model, b.env, b.interp, o);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_EQ(r.violations[0].tag, "inv2");
  EXPECT_EQ(r.violations[0].depth, 1);
  EXPECT_EQ(r.violations[0].state, n_is(1));
  ASSERT_EQ(r.violations[0].trace.size(), 1u);
  EXPECT_EQ(r.violations[0].trace[0].event, "up");
}

TEST(Explore, Deadlock) {
  auto b = testing::build(
      "machine dl variables n invariants @inv1 n : INT events event "
      "INITIALISATION then @act1 n := 0 end event up where @grd1 n < 1 then @act1 "
      "n := n + 1 end end",
      {});
  auto r = explore(b.model, b.env, b.interp);
  ASSERT_EQ(r.deadlocks.size(), 1u);
  EXPECT_EQ(r.deadlocks[0].state, n_is(1));
  EXPECT_TRUE(r.clean());
}

TEST(Explore, StateCap) {
  auto b = testing::cars(5);
  ExploreOptions o;
  o.state_cap = 2;
  try {
    explore(b.model, b.env, b.interp, o);
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StateSpaceExceeded);
  }
}

TEST(Explore, WitnessTracesReplay) {
  auto b = testing::build(
      "machine w variables a c invariants @inv1 a : INT & c : INT @inv2 a + c < 4 "
      "events event INITIALISATION then @i1 a := 0 @i2 c := 0 end event "
      "inc any x where @grd1 x : NAT & x <= 1 then @act1 a := a + x end event "
      "swap then @act1 a := c @act2 c := a end end",
      {}, "", 2);
  ExploreOptions o;
  o.max_depth = 6;
  auto r = explore(b.model, b.env, b.interp, o);
  ASSERT_FALSE(r.violations.empty());
  for (const auto& f : r.violations) {
    SimState s = init_state(b.model, b.interp);
    for (const auto& step : f.trace)
      s = fire(b.model, s, b.interp, find_event(b.model, step.event), step.args);
    EXPECT_EQ(s, f.state);
    EXPECT_EQ(static_cast<int>(f.trace.size()), f.depth);
  }
}

TEST(Explore, DeterministicAndParallelAgree) {
  auto b = testing::build(
      "machine w variables a c invariants @inv1 a : INT & c : INT @inv2 a < 3 "
      "events event INITIALISATION then @i1 a := 0 @i2 c := 0 end event "
      "inc any x where @grd1 x : INT then @act1 a := a + x end event "
      "swap then @act1 a := c @act2 c := a end end",
      {}, "", 1);
  ExploreOptions o;
  o.max_depth = 4;
  const auto base = format_report_records(explore(b.model, b.env, b.interp, o), b.model, b.interp);
  EXPECT_EQ(base, format_report_records(explore(b.model, b.env, b.interp, o), b.model, b.interp));
  o.jobs = 4;
  EXPECT_EQ(base, format_report_records(explore(b.model, b.env, b.interp, o), b.model, b.interp));
}

TEST(EnumerateArgs, Ranges) {
  auto b = testing::build(
      "machine m sees c variables v invariants @inv1 v : INT events event "
      "INITIALISATION then @a v := 0 end event go any x y where @grd1 x : INT "
      "@grd2 y : S then @a v := x end end",
      {"context c sets S end"}, "S=2", 2);
  auto args = enumerate_args(find_event(b.model, "go"), b.env, b.interp);
  EXPECT_EQ(args.size(), 10u);
}

TEST(Bindings, Syntax) {
  auto b = parse_bindings("# sizes\nd=2\n\nflag = true  # trailing\nS={red, green}\nT=4\nr0={}\n");
  EXPECT_EQ(b.entries.size(), 5u);
  EXPECT_EQ(b.find("d")->value.int_value, 2);
  EXPECT_EQ(b.find("d")->line, 2);
  EXPECT_TRUE(b.find("flag")->value.bool_value);
  EXPECT_EQ(b.find("S")->value.to_string(), "{red,green}");
  EXPECT_EQ(b.find("r0")->value.kind, BindingLiteral::Kind::Enum);
}

TEST(Bindings, Malformed) {
  for (const char* text : {"d", "d=", "d=1 2", "3=4", "d=1\nd=2", "d={1,"}) {
    try {
      parse_bindings(text);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::BadBinding) << text;
    }
  }
}

TEST(Bindings, UnknownKeyAndWrongType) {
  EXPECT_THROW(testing::build(testing::slurp(testing::data_dir() / "m0.ebm"),
                              {testing::slurp(testing::data_dir() / "c0.ebc")}, "d=2\ne=1"),
               Error);
  EXPECT_THROW(testing::build(testing::slurp(testing::data_dir() / "m0.ebm"),
                              {testing::slurp(testing::data_dir() / "c0.ebc")}, "d=true"),
               Error);
}

TEST(Bindings, CarrierSizes) {
  const char* m =
      "machine m sees c variables v invariants @inv1 v : INT events event "
      "INITIALISATION then @a v := 0 end end";
  auto named = testing::build(m, {"context c sets S end"}, "S={red, green}");
  EXPECT_EQ(named.interp.carriers.at("S"), (std::vector<std::string>{"red", "green"}));
  auto sized = testing::build(m, {"context c sets S end"}, "S=2");
  EXPECT_EQ(sized.interp.carriers.at("S"), (std::vector<std::string>{"S1", "S2"}));
  auto dflt = testing::build(m, {"context c sets S end"}, "");
  EXPECT_EQ(dflt.interp.carrier_size("S"), kDefaultCarrierSize);
  EXPECT_THROW(testing::build(m, {"context c sets S end"}, "S=0"), Error);
}

class ContractCheck : public ::testing::TestWithParam<int> {};

TEST_P(ContractCheck, CarsHaveNoMismatches) {
  auto b = testing::cars(GetParam());
  auto t = translate(b.model, b.env, b.interp);
  auto r = check_contract_equivalence(b.model, b.env, b.interp, t.machine);
  EXPECT_TRUE(r.contracts_checked);
  EXPECT_EQ(r.states_explored, static_cast<std::size_t>(GetParam() + 1));
  EXPECT_TRUE(r.mismatches.empty()) << format_report_text(r, b.model, b.interp);
  EXPECT_TRUE(r.violations.empty());
}

INSTANTIATE_TEST_SUITE_P(D, ContractCheck, ::testing::Values(1, 2, 3, 5));

EiffelFeature* mutable_feature(EiffelUnit& u, const std::string& name) {
  for (auto& g : u.groups)
    for (auto& f : g.features)
      if (f.name == name) return &f;
  return nullptr;
}

TEST(ContractCheck, EnsureWithoutOldIsCaught) {
  auto b = testing::cars(2);
  auto m = translate(b.model, b.env, b.interp).machine;
  auto* f = mutable_feature(m, "ml_out");
  f->ensure[0].expr = xi_expr(*expr("n = n + 1"), b.model, b.env, XiMode::Plain);
  auto r = check_contract_equivalence(b.model, b.env, b.interp, m);
  // one per ML_out firing: from n=0 and n=1
  ASSERT_EQ(r.mismatches.size(), 2u);
  for (const auto& x : r.mismatches) {
    EXPECT_EQ(x.tag, "act1");
    EXPECT_EQ(x.side, "ensure");
    EXPECT_EQ(x.event, "ML_out");
  }
}

TEST(ContractCheck, WeakenedRequireIsCaughtAtBoundary) {
  auto b = testing::cars(2);
  auto m = translate(b.model, b.env, b.interp).machine;
  mutable_feature(m, "ml_out")->require[0].expr =
      xi_expr(*expr("n <= d"), b.model, b.env, XiMode::Plain);
  auto r = check_contract_equivalence(b.model, b.env, b.interp, m);
  ASSERT_FALSE(r.mismatches.empty());
  EXPECT_EQ(r.mismatches[0].side, "require");
  EXPECT_EQ(r.mismatches[0].tag, "grd1");
  EXPECT_EQ(r.mismatches[0].state, n_is(2));
}

TEST(ContractCheck, DroppedInvariantIsCaught) {
  auto b = testing::cars(2);
  auto m = translate(b.model, b.env, b.interp).machine;
  m.invariants.erase(m.invariants.begin() + 1);
  auto r = check_contract_equivalence(b.model, b.env, b.interp, m);
  ASSERT_FALSE(r.mismatches.empty());
  EXPECT_EQ(r.mismatches[0].tag, "inv2");
}

TEST(ContractCheck, WrongBodyIsCaught) {
  auto b = testing::cars(2);
  auto m = translate(b.model, b.env, b.interp).machine;
  auto* f = mutable_feature(m, "ml_in");
  f->body[0].value = xi_expr(*expr("n - 2"), b.model, b.env, XiMode::Plain);
  auto r = check_contract_equivalence(b.model, b.env, b.interp, m);
  bool body = false;
  for (const auto& x : r.mismatches) body = body || x.side == "body";
  EXPECT_TRUE(body);
}

TEST(Report, TextAndRecords) {
  auto b = testing::cars(2);
  auto t = translate(b.model, b.env, b.interp);
  auto r = check_contract_equivalence(b.model, b.env, b.interp, t.machine);
  const auto text = format_report_text(r, b.model, b.interp);
  EXPECT_EQ(text.rfind("3 states explored, 0 invariant violations, 0 deadlocks, 0 mismatches\n", 0), 0u);
  const auto rec = format_report_records(r, b.model, b.interp);
  EXPECT_NE(rec.find("\"kind\":\"summary\""), std::string::npos);
}

}  // namespace
}  // namespace eb2dbc
