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

#include "eb2dbc/rodin.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "eb2dbc/linker.hpp"
#include "eb2dbc/parser.hpp"

namespace eb2dbc {
namespace {

namespace pt = boost::property_tree;

constexpr const char* kPrefix = "org.eventb.core.";

std::string unit_of(const RodinDocument& doc) {
  return doc.source.empty() ? doc.name : doc.source;
}

pt::ptree read_xml(const RodinDocument& doc, const std::string& root_name) {
  pt::ptree tree;
  std::istringstream in(doc.xml);
  try {
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error& e) {
    throw Error(ErrorKind::Xml, std::string("malformed XML: ") + e.message(),
                {static_cast<int>(std::max<unsigned long>(e.line(), 1)), 1},
                unit_of(doc));
  }
  auto it = std::find_if(tree.begin(), tree.end(), [](const auto& kv) {
    return kv.first != "<xmlcomment>";
  });
  if (it == tree.end() || it->first != kPrefix + root_name)
    throw Error(ErrorKind::Xml,
                "expected root element " + std::string(kPrefix) + root_name,
                {1, 1}, unit_of(doc));
  return tree;
}

const pt::ptree& root_of(const pt::ptree& tree) {
  for (const auto& kv : tree)
    if (kv.first != "<xmlcomment>") return kv.second;
  return tree;
}

std::string attr(const pt::ptree& node, const char* name) {
  // Attribute names contain dots, so address them with '/' as the separator.
  return node.get<std::string>(
      pt::ptree::path_type(std::string("<xmlattr>/") + kPrefix + name, '/'),
      "");
}

/// Element name without the Rodin namespace prefix, or empty for the
/// pseudo-children boost uses for attributes and comments.
std::string element(const std::string& key) {
  if (key == "<xmlattr>" || key == "<xmlcomment>" || key == "<xmltext>")
    return {};
  const std::string prefix = kPrefix;
  return key.rfind(prefix, 0) == 0 ? key.substr(prefix.size()) : key;
}

[[noreturn]] void unsupported(const std::string& what, const std::string& elem,
                              const RodinDocument& doc) {
  throw Error(ErrorKind::UnsupportedElement,
              what + " is not supported (element " + elem + ")", {},
              unit_of(doc))
      .with_subject(what);
}

void require_identifier(const std::string& id, const char* what,
                        const RodinDocument& doc) {
  if (id.empty())
    throw Error(ErrorKind::Xml, std::string(what) + " without an identifier",
                {}, unit_of(doc));
}

std::string label_or(const std::string& label, const char* stem,
                     std::size_t index) {
  return label.empty() ? std::string(stem) + "_" + std::to_string(index)
                       : label;
}

ExprPtr parse_attribute(const std::string& text, const std::string& where,
                        const RodinDocument& doc) {
  try {
    return parse_expression(lex(text));
  } catch (Error& e) {
    e.with_unit(unit_of(doc) + " (" + where + ")");
    throw;
  }
}

void check_unique(std::set<std::string>& seen, const std::string& name,
                  const std::string& what, const RodinDocument& doc) {
  if (!seen.insert(name).second)
    throw Error(ErrorKind::Parse, "duplicate " + what + " '" + name + "'", {},
                unit_of(doc))
        .with_subject(name);
}

EventAst read_event(const pt::ptree& node, const RodinDocument& doc,
                    const std::vector<std::string>& variables) {
  EventAst ev;
  ev.name = attr(node, "label");
  if (ev.name.empty())
    throw Error(ErrorKind::Xml, "event without a label", {}, unit_of(doc));
  if (attr(node, "extended") == "true")
    unsupported("extended", "event " + ev.name, doc);

  std::set<std::string> guard_labels, action_labels, params, targets;
  for (const auto& [key, child] : node) {
    const std::string el = element(key);
    if (el.empty()) continue;
    if (el == "parameter") {
      auto id = attr(child, "identifier");
      require_identifier(id, "parameter", doc);
      check_unique(params, id, "parameter", doc);
      ev.params.push_back(id);
    } else if (el == "guard") {
      LabeledPredicate g;
      g.label = label_or(attr(child, "label"), "grd", ev.guards.size() + 1);
      check_unique(guard_labels, g.label, "guard label", doc);
      g.predicate =
          parse_attribute(attr(child, "predicate"), ev.name + "/" + g.label, doc);
      ev.guards.push_back(std::move(g));
    } else if (el == "action") {
      LabeledAction a;
      a.label = label_or(attr(child, "label"), "act", ev.actions.size() + 1);
      check_unique(action_labels, a.label, "action label", doc);
      const std::string text = attr(child, "assignment");
      const std::string where = ev.name + "/" + a.label;
      // Checked before lexing: `:|` predicates use primed names the lexer rejects.
      for (const char* op : {":\u2208", ":\u2223", ":|", "::"})
        if (text.find(op) != std::string::npos)
          unsupported("non-deterministic assignment", "action " + where, doc);
      std::vector<Token> toks;
      try {
        toks = lex(text);
      } catch (Error& e) {
        e.with_unit(unit_of(doc) + " (" + where + ")");
        throw;
      }
      if (toks.size() > 1 && toks[1].spelling == ",")
        unsupported("multiple assignment", "action " + where, doc);
      Assignment asg;
      try {
        asg = parse_assignment(toks);
      } catch (Error& e) {
        e.with_unit(unit_of(doc) + " (" + where + ")");
        throw;
      }
      if (std::find(variables.begin(), variables.end(), asg.target) ==
          variables.end())
        throw Error(ErrorKind::Parse,
                    "action target '" + asg.target + "' is not a machine variable",
                    asg.pos, unit_of(doc) + " (" + where + ")")
            .with_subject(asg.target);
      check_unique(targets, asg.target, "assignment target", doc);
      a.target = asg.target;
      a.rhs = asg.rhs;
      ev.actions.push_back(std::move(a));
    } else if (el == "refinesEvent") {
      unsupported("refines", el, doc);
    } else if (el == "witness") {
      unsupported("witness", el, doc);
    } else {
      unsupported(el, el, doc);
    }
  }
  return ev;
}

}  // namespace

MachineAst read_rodin_machine(const RodinDocument& doc) {
  const pt::ptree tree = read_xml(doc, "machineFile");
  const pt::ptree& root = root_of(tree);

  MachineAst m;
  m.name = doc.name;
  m.source = unit_of(doc);
  m.pos = {1, 1};

  std::set<std::string> vars, inv_labels, events;
  bool have_init = false;
  for (const auto& [key, child] : root) {
    const std::string el = element(key);
    if (el.empty()) continue;
    if (el == "seesContext") {
      auto target = attr(child, "target");
      require_identifier(target, "seesContext", doc);
      m.sees.push_back(target);
    } else if (el == "variable") {
      auto id = attr(child, "identifier");
      require_identifier(id, "variable", doc);
      check_unique(vars, id, "variable", doc);
      m.variables.push_back(id);
    } else if (el == "invariant") {
      LabeledPredicate inv;
      inv.label = label_or(attr(child, "label"), "inv", m.invariants.size() + 1);
      check_unique(inv_labels, inv.label, "invariant label", doc);
      inv.predicate = parse_attribute(attr(child, "predicate"), inv.label, doc);
      m.invariants.push_back(std::move(inv));
    } else if (el == "event") {
      // Events may precede variables in hand-written files; collect later.
      continue;
    } else if (el == "refinesMachine") {
      unsupported("refines", el, doc);
    } else if (el == "variant") {
      unsupported("variant", el, doc);
    } else {
      unsupported(el, el, doc);
    }
  }
  for (const auto& [key, child] : root) {
    if (element(key) != "event") continue;
    EventAst ev = read_event(child, doc, m.variables);
    check_unique(events, ev.name, "event", doc);
    if (is_initialisation_name(ev.name)) {
      if (!ev.params.empty() || !ev.guards.empty())
        throw Error(ErrorKind::Parse,
                    "initialisation takes no parameters and no guards", {},
                    unit_of(doc));
      have_init = true;
      m.initialisation = std::move(ev);
    } else {
      m.events.push_back(std::move(ev));
    }
  }
  if (!have_init)
    throw Error(ErrorKind::MissingInitialisation,
                "machine '" + m.name + "' has no INITIALISATION event", {},
                unit_of(doc))
        .with_subject(m.name);
  return m;
}

ContextAst read_rodin_context(const RodinDocument& doc) {
  const pt::ptree tree = read_xml(doc, "contextFile");
  const pt::ptree& root = root_of(tree);

  ContextAst c;
  c.name = doc.name;
  c.source = unit_of(doc);
  c.pos = {1, 1};
  std::set<std::string> names, labels;
  for (const auto& [key, child] : root) {
    const std::string el = element(key);
    if (el.empty()) continue;
    if (el == "constant") {
      auto id = attr(child, "identifier");
      require_identifier(id, "constant", doc);
      check_unique(names, id, "name", doc);
      c.constants.push_back(id);
    } else if (el == "carrierSet") {
      auto id = attr(child, "identifier");
      require_identifier(id, "carrierSet", doc);
      check_unique(names, id, "name", doc);
      c.sets.push_back(id);
    } else if (el == "axiom") {
      LabeledPredicate ax;
      ax.label = label_or(attr(child, "label"), "axm", c.axioms.size() + 1);
      check_unique(labels, ax.label, "axiom label", doc);
      ax.predicate = parse_attribute(attr(child, "predicate"), ax.label, doc);
      c.axioms.push_back(std::move(ax));
    } else if (el == "extendsContext") {
      unsupported("extends", el, doc);
    } else {
      unsupported(el, el, doc);
    }
  }
  return c;
}

EventBModel ingest_rodin(const RodinDocument& machine,
                         const std::vector<RodinDocument>& contexts) {
  MachineAst m = read_rodin_machine(machine);
  std::vector<ContextAst> cs;
  cs.reserve(contexts.size());
  for (const auto& doc : contexts) cs.push_back(read_rodin_context(doc));
  return link(std::move(m), std::move(cs));
}

}  // namespace eb2dbc
