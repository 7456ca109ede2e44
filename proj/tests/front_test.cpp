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

#include <algorithm>

#include "eb2dbc/lexer.hpp"
#include "eb2dbc/linker.hpp"
#include "eb2dbc/parser.hpp"
#include "eb2dbc/printer.hpp"
#include "eb2dbc/rodin.hpp"
#include "support.hpp"

namespace eb2dbc {
namespace {

using testing::data_dir;
using testing::slurp;

std::vector<std::pair<TokenKind, std::string>> kinds(const std::vector<Token>& ts) {
  std::vector<std::pair<TokenKind, std::string>> out;
  for (const auto& t : ts) out.emplace_back(t.kind, t.spelling);
  return out;
}

TEST(Lex, EmptyInput) { EXPECT_TRUE(lex("").empty()); }

TEST(Lex, Assignment) {
  auto ts = lex("n := n + 1");
  std::vector<std::pair<TokenKind, std::string>> want = {
      {TokenKind::Identifier, "n"},     {TokenKind::Operator, ":="},
      {TokenKind::Identifier, "n"},     {TokenKind::Operator, "+"},
      {TokenKind::IntegerLiteral, "1"}};
  EXPECT_EQ(kinds(ts), want);
}

TEST(Lex, LabelledGuard) {
  auto ts = lex("@grd1 n < d");
  std::vector<std::pair<TokenKind, std::string>> want = {
      {TokenKind::LabelMarker, "@"},  {TokenKind::Identifier, "grd1"},
      {TokenKind::Identifier, "n"},   {TokenKind::Operator, "<"},
      {TokenKind::Identifier, "d"}};
  EXPECT_EQ(kinds(ts), want);
}

TEST(Lex, PositionsAreOneBased) {
  auto ts = lex("a\n  bb := 3");
  ASSERT_EQ(ts.size(), 4u);
  EXPECT_EQ(ts[0].pos(), (SourcePos{1, 1}));
  EXPECT_EQ(ts[1].pos(), (SourcePos{2, 3}));
  EXPECT_EQ(ts[2].pos(), (SourcePos{2, 6}));
  EXPECT_EQ(ts[3].pos(), (SourcePos{2, 9}));
}

TEST(Lex, CommentsAreSkipped) {
  auto ts = lex("x // trailing\n/* block\n */ y");
  ASSERT_EQ(ts.size(), 2u);
  EXPECT_EQ(ts[1].lexeme, "y");
  EXPECT_EQ(ts[1].line, 3);
}

TEST(Lex, UnicodeOperatorsNormalise) {
  auto ts = lex("n ∈ ℕ ∧ r ⊆ S");
  std::vector<std::string> spell;
  for (const auto& t : ts) spell.push_back(t.spelling);
  EXPECT_EQ(spell, (std::vector<std::string>{"n", ":", "NAT", "&", "r", "<:", "S"}));
  EXPECT_EQ(ts[1].lexeme, "∈");
}

TEST(Lex, IllegalCharacter) {
  try {
    lex("n := 1\n  n ? 2");
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Lex);
    EXPECT_EQ(e.pos(), (SourcePos{2, 5}));
  }
}

TEST(Lex, UnterminatedComment) {
  try {
    lex("x /* never closed");
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Lex);
    EXPECT_EQ(e.pos(), (SourcePos{1, 3}));
  }
}

TEST(ParseMachine, CarsOnBridge) {
  auto m = parse_machine_text(slurp(data_dir() / "m0.ebm"));
  EXPECT_EQ(m.name, "m0");
  EXPECT_EQ(m.sees, std::vector<std::string>{"c0"});
  EXPECT_EQ(m.variables, std::vector<std::string>{"n"});
  ASSERT_EQ(m.invariants.size(), 2u);
  EXPECT_EQ(m.invariants[0].label, "inv1");
  EXPECT_EQ(m.invariants[1].label, "inv2");
  ASSERT_EQ(m.events.size(), 2u);
  EXPECT_EQ(m.events[0].name, "ML_out");
  EXPECT_EQ(m.events[1].name, "ML_in");
  ASSERT_EQ(m.initialisation.actions.size(), 1u);
  EXPECT_EQ(m.initialisation.actions[0].target, "n");
  EXPECT_EQ(print_expr(*m.initialisation.actions[0].rhs), "0");
  EXPECT_EQ(print_expr(*m.events[0].guards[0].predicate), "n < d");
  EXPECT_EQ(print_expr(*m.events[1].actions[0].rhs), "n - 1");
}

TEST(ParseMachine, OnlyInitialisation) {
  auto m = parse_machine_text(
      "machine m variables v invariants @inv1 v : INT events "
      "event INITIALISATION then @act1 v := 0 end end");
  EXPECT_TRUE(m.events.empty());
  EXPECT_EQ(m.initialisation.actions.size(), 1u);
}

TEST(ParseMachine, InitialisationIsCaseInsensitive) {
  auto m = parse_machine_text(
      "machine m variables v events event Initialisation then @act1 v := 0 "
      "end end");
  EXPECT_EQ(m.initialisation.actions.size(), 1u);
}

TEST(ParseMachine, DuplicateEventName) {
  const char* src =
      "machine m variables n events\n"
      "event INITIALISATION then @act1 n := 0 end\n"
      "event ML_out then @act1 n := 1 end\n"
      "event ML_out then @act1 n := 2 end\nend";
  try {
    parse_machine_text(src);
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    EXPECT_EQ(e.pos().line, 4);
  }
}

TEST(ParseMachine, MissingInitialisation) {
  try {
    parse_machine_text("machine m variables n events event go then @a n := 1 end end");
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingInitialisation);
  }
}

TEST(ParseMachine, ErrorCarriesExpectedTokens) {
  const std::string src = "machine m\nvariables n\ninvariants\n  @inv1 n : \nevents end";
  try {
    parse_machine_text(src);
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    EXPECT_EQ(e.pos(), (SourcePos{5, 1}));
    EXPECT_FALSE(e.expected().empty());
  }
}

TEST(ParseMachine, InitialisationWithGuardRejected) {
  EXPECT_THROW(parse_machine_text("machine m variables n events event INITIALISATION "
                                  "where @g n > 0 then @a n := 0 end end"),
               Error);
}

TEST(ParseMachine, DoubleAssignmentRejected) {
  EXPECT_THROW(parse_machine_text("machine m variables n events event INITIALISATION "
                                  "then @a n := 0 @b n := 1 end end"),
               Error);
}

TEST(ParseMachine, NondeterministicActionRejected) {
  EXPECT_THROW(parse_machine_text("machine m variables n events event INITIALISATION "
                                  "then @a n :: NAT end end"),
               Error);
}

TEST(ParseMachine, ParseErrorPositionsPointAtTokens) {
  const std::vector<std::string> broken = {
      "machine m variables n events event INITIALISATION then @a n := end end",
      "machine m variables n invariants @i n < events end",
      "machine m variables n events event INITIALISATION then @a n := (1 end end",
      "machine m sees events end",
      "machine 3 end",
  };
  for (const auto& src : broken) {
    try {
      parse_machine_text(src);
      ADD_FAILURE() << "accepted: " << src;
    } catch (const Error& e) {
      ASSERT_TRUE(e.pos().known()) << src;
      bool found = false;
      for (const auto& t : lex(src))
        if (t.pos() == e.pos()) found = true;
      EXPECT_TRUE(found) << src << " at " << e.pos().line << ":" << e.pos().column;
    }
  }
}

TEST(ParseContext, CarsOnBridge) {
  auto c = parse_context_text(slurp(data_dir() / "c0.ebc"));
  EXPECT_EQ(c.name, "c0");
  EXPECT_EQ(c.constants, std::vector<std::string>{"d"});
  EXPECT_TRUE(c.sets.empty());
  ASSERT_EQ(c.axioms.size(), 2u);
  EXPECT_EQ(c.axioms[0].label, "axm1");
  EXPECT_EQ(print_expr(*c.axioms[0].predicate), "d : NAT");
  EXPECT_EQ(c.axioms[1].label, "axm2");
  EXPECT_EQ(print_expr(*c.axioms[1].predicate), "d > 0");
}

TEST(ParseContext, Empty) {
  auto c = parse_context_text("context c1 end");
  EXPECT_EQ(c.name, "c1");
  EXPECT_TRUE(c.constants.empty());
  EXPECT_TRUE(c.sets.empty());
  EXPECT_TRUE(c.axioms.empty());
}

TEST(ParseContext, SetConstantClash) {
  try {
    parse_context_text("context c constants S sets S end");
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
  }
}

TEST(ParseExpr, Precedence) {
  auto e = [](const char* s) {
    auto ts = lex(s);
    return print_expr(*parse_expression(ts));
  };
  EXPECT_EQ(e("a + b * c"), "a + b * c");
  EXPECT_EQ(e("(a + b) * c"), "(a + b) * c");
  EXPECT_EQ(e("a - (b - c)"), "a - (b - c)");
  EXPECT_EQ(e("a - b - c"), "a - b - c");
  EXPECT_EQ(e("p & q or r"), "p & q or r");
  EXPECT_EQ(e("p & (q or r)"), "p & (q or r)");
  EXPECT_EQ(e("p => q <=> r"), "p => q <=> r");
  EXPECT_EQ(e("not x < 1 & y = 2"), "not x < 1 & y = 2");
  EXPECT_EQ(e("a \\/ b /\\ c"), "a \\/ b /\\ c");
  EXPECT_EQ(e("- - a"), "- -a");
}

TEST(Link, CarsOnBridge) {
  auto model = link(parse_machine_text(slurp(data_dir() / "m0.ebm")),
                    {parse_context_text(slurp(data_dir() / "c0.ebc"))});
  const Symbol* d = model.symbols.global("d");
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->kind, SymbolKind::Constant);
  EXPECT_EQ(d->owner, "c0");
  const Symbol* n = model.symbols.global("n");
  ASSERT_NE(n, nullptr);
  EXPECT_EQ(n->kind, SymbolKind::Variable);
  EXPECT_EQ(n->owner, "m0");
}

TEST(Link, NoContexts) {
  auto model = link(parse_machine_text(
                        "machine m variables v events event INITIALISATION "
                        "then @a v := 0 end event go then @a v := v + 1 end end"),
                    {});
  EXPECT_TRUE(model.contexts.empty());
}

TEST(Link, MissingContext) {
  try {
    link(parse_machine_text(slurp(data_dir() / "m0.ebm")), {});
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingContext);
    EXPECT_EQ(e.subject(), "c0");
  }
}

TEST(Link, UnresolvedIdentifier) {
  try {
    link(parse_machine_text("machine m variables v events event INITIALISATION "
                            "then @a v := 0 end event go where @g w > 0 then "
                            "@a v := 1 end end"),
         {});
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnresolvedIdentifier);
    EXPECT_EQ(e.subject(), "w");
    EXPECT_TRUE(e.pos().known());
  }
}

TEST(Link, DuplicateDeclaration) {
  try {
    link(parse_machine_text("machine m sees c variables d events event "
                            "INITIALISATION then @a d := 0 end end"),
         {parse_context_text("context c constants d end")});
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicateDeclaration);
    EXPECT_EQ(e.subject(), "d");
  }
}

TEST(Link, ParameterScopesAreSeparate) {
  auto model = link(parse_machine_text(
                        "machine m variables v events event INITIALISATION "
                        "then @a v := 0 end event a any x where @g x : INT then "
                        "@a v := x end event b any x where @g x : INT then @a v "
                        ":= x end end"),
                    {});
  EXPECT_EQ(model.symbols.params().size(), 2u);
}

TEST(Rodin, MatchesSurfaceParse) {
  auto surface = link(parse_machine_text(slurp(data_dir() / "m0.ebm")),
                      {parse_context_text(slurp(data_dir() / "c0.ebc"))});
  auto rodin = ingest_rodin({"m0", slurp(data_dir() / "m0.bum"), "m0.bum"},
                            {{"c0", slurp(data_dir() / "c0.buc"), "c0.buc"}});
  EXPECT_TRUE(same_structure(surface, rodin));
  EXPECT_EQ(print_machine(surface.machine), print_machine(rodin.machine));
}

const char* kRodinHead =
    "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    "<org.eventb.core.machineFile version=\"5\">\n"
    "<org.eventb.core.variable name=\"v\" org.eventb.core.identifier=\"v\"/>\n"
    "<org.eventb.core.invariant name=\"i\" org.eventb.core.label=\"inv1\" "
    "org.eventb.core.predicate=\"v ∈ ℤ\"/>\n"
    "<org.eventb.core.event name=\"e\" org.eventb.core.label=\"INITIALISATION\">\n"
    "<org.eventb.core.action name=\"a\" org.eventb.core.label=\"act1\" "
    "org.eventb.core.assignment=\"v ≔ 0\"/>\n"
    "</org.eventb.core.event>\n";

TEST(Rodin, OnlyInitialisation) {
  std::string xml = std::string(kRodinHead) + "</org.eventb.core.machineFile>\n";
  auto model = ingest_rodin({"m", xml, {}}, {});
  EXPECT_TRUE(model.machine.events.empty());
  EXPECT_EQ(model.machine.name, "m");
}

TEST(Rodin, RefinesIsUnsupported) {
  std::string xml = std::string(kRodinHead) +
                    "<org.eventb.core.refinesMachine name=\"r\" "
                    "org.eventb.core.target=\"m0\"/>\n"
                    "</org.eventb.core.machineFile>\n";
  try {
    ingest_rodin({"m", xml, {}}, {});
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedElement);
    EXPECT_EQ(e.subject(), "refines");
  }
}

TEST(Rodin, NonDeterministicAssignmentIsUnsupported) {
  for (const char* asg : {"v :∈ ℕ", "v :∣ v' > 0"}) {
    std::string xml =
        std::string(kRodinHead) +
        "<org.eventb.core.event name=\"f\" org.eventb.core.label=\"step\">\n"
        "<org.eventb.core.action name=\"a\" org.eventb.core.label=\"act1\" "
        "org.eventb.core.assignment=\"" + asg + "\"/>\n"
        "</org.eventb.core.event>\n</org.eventb.core.machineFile>\n";
    try {
      ingest_rodin({"m", xml, {}}, {});
      FAIL() << "no error for " << asg;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::UnsupportedElement) << asg;
    }
  }
}

TEST(Rodin, MalformedXml) {
  try {
    ingest_rodin({"m", "<org.eventb.core.machineFile>", {}}, {});
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Xml);
  }
}

TEST(Rodin, EmptyLabelsGetPositionalNames) {
  std::string xml =
      std::string(kRodinHead) +
      "<org.eventb.core.event name=\"g\" org.eventb.core.label=\"go\">\n"
      "<org.eventb.core.guard name=\"g1\" org.eventb.core.predicate=\"v &lt; 3\"/>\n"
      "<org.eventb.core.action name=\"a1\" org.eventb.core.assignment=\"v ≔ v + 1\"/>\n"
      "</org.eventb.core.event>\n</org.eventb.core.machineFile>\n";
  auto model = ingest_rodin({"m", xml, {}}, {});
  ASSERT_EQ(model.machine.events.size(), 1u);
  EXPECT_EQ(model.machine.events[0].guards[0].label, "grd_1");
  EXPECT_EQ(model.machine.events[0].actions[0].label, "act_1");
}

TEST(Printer, CarsRoundTrip) {
  auto m = parse_machine_text(slurp(data_dir() / "m0.ebm"));
  auto again = parse_machine_text(print_machine(m));
  EXPECT_TRUE(same_structure(m, again));
  auto c = parse_context_text(slurp(data_dir() / "c0.ebc"));
  EXPECT_TRUE(same_structure(c, parse_context_text(print_context(c))));
}

TEST(Parse, Deterministic) {
  const std::string src = slurp(data_dir() / "m0.ebm");
  EXPECT_TRUE(same_structure(parse_machine_text(src), parse_machine_text(src)));
}

}  // namespace
}  // namespace eb2dbc
