#include "trel/render.hpp"

#include <map>
#include <sstream>

namespace trel::render {

namespace {

std::string value_string(TruthValue v) { return std::string(1, to_char(v)); }

Json names(std::span<const Variable> set) {
  Json out = Json::array();
  for (const Variable& v : set) out.push_back(v.name());
  return out;
}

Json assignment_json(const Assignment& a) {
  Json out = Json::object();
  for (const auto& [var, value] : a.entries()) out[var.name()] = value_string(value);
  return out;
}

std::string_view connective_name(Connective c) {
  switch (c) {
    case Connective::Var: return "var";
    case Connective::Not: return "not";
    case Connective::And: return "and";
    case Connective::Or: return "or";
    case Connective::Implies: return "implies";
  }
  return "";
}

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string join_sets(const std::vector<VarSet>& sets) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i != 0) out += ", ";
    out += to_string(sets[i]);
  }
  return out;
}

std::string closure_line(const Closure& c) {
  const NodeId first = std::min(c.positive, c.negative);
  const NodeId second = std::max(c.positive, c.negative);
  return "× closed on " + c.variable.name() + " (N" + std::to_string(first) + ", N" +
         std::to_string(second) + ")";
}

}  // namespace

Json ast_json(const Formula& f) {
  switch (f.connective()) {
    case Connective::Var:
      return Json{{"var", f.variable().name()}};
    case Connective::Not:
      return Json{{"op", "not"}, {"operand", ast_json(f.operand())}};
    default:
      return Json{{"op", connective_name(f.connective())},
                  {"lhs", ast_json(f.lhs())},
                  {"rhs", ast_json(f.rhs())}};
  }
}

Json to_json(const Formula& f) {
  return Json{{"formula", to_string(f)}, {"variables", names(variables(f))}, {"ast", ast_json(f)}};
}

Json to_json(const TruthTable& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.row_count(); ++i) {
    Json values = Json::array();
    for (TruthValue v : t.row(i)) values.push_back(value_string(v));
    rows.push_back(Json{{"values", std::move(values)}, {"value", value_string(t.values[i])}});
  }
  return Json{{"formula", to_string(t.formula)},
              {"mode", to_string(t.mode)},
              {"variables", names(t.variables)},
              {"varied", names(t.varied)},
              {"rows", std::move(rows)}};
}

Json to_json(const RelevanceReport& r) {
  Json sets = Json::array();
  for (const VarSet& s : r.minimal_determining_sets) sets.push_back(names(s));
  return Json{{"formula", to_string(r.formula)},
              {"minimal_determining_sets", std::move(sets)},
              {"redundant", names(r.redundant)},
              {"relevant", names(r.relevant)},
              {"t_relevant", r.t_relevant},
              {"classification", to_string(r.classification)}};
}

Json to_json(const TableauResult& r) {
  Json out{{"formula", to_string(r.formula)},
           {"strategy", to_string(r.strategy)},
           {"outcome", to_string(r.outcome)}};
  if (r.outcome != Outcome::Open) out["closing_set"] = names(r.closing_set);
  if (r.strategy == Strategy::Exhaustive) {
    Json sets = Json::array();
    for (const VarSet& s : r.closing_sets) sets.push_back(names(s));
    out["closing_sets"] = std::move(sets);
  }
  Json nodes = Json::array();
  for (const TableauNode& n : r.nodes) {
    Json node{{"id", n.id}, {"formula", to_string(n.formula)}, {"rule", to_string(n.rule)}};
    node["parent"] = n.parent ? Json(*n.parent) : Json(nullptr);
    node["source"] = n.source ? Json(*n.source) : Json(nullptr);
    node["children"] = n.children;
    nodes.push_back(std::move(node));
  }
  out["nodes"] = std::move(nodes);
  Json branches = Json::array();
  for (const Branch& b : r.branches) {
    Json branch{{"path", b.path}, {"status", b.is_closed() ? "closed" : "open"}};
    if (b.closure) {
      branch["variable"] = b.closure->variable.name();
      branch["positive"] = b.closure->positive;
      branch["negative"] = b.closure->negative;
    }
    branches.push_back(std::move(branch));
  }
  out["branches"] = std::move(branches);
  return out;
}

Json to_json(const EquivalenceVerdict& v) {
  Json out{{"formula", to_string(v.formula)}, {"set", names(v.set)}, {"holds", v.holds()}};
  if (v.witness) {
    out["witness"] = Json{{"assignment", assignment_json(v.witness->assignment)},
                          {"formula_value", value_string(v.witness->formula_value)},
                          {"canonical_value", value_string(v.witness->canonical_value)}};
  }
  return out;
}

std::string table_tsv(const TruthTable& t) {
  std::string out;
  for (const Variable& v : t.variables) {
    out += v.name();
    out += '\t';
  }
  out += "value\n";
  for (std::size_t i = 0; i < t.row_count(); ++i) {
    for (TruthValue v : t.row(i)) {
      out += to_char(v);
      out += '\t';
    }
    out += to_char(t.values[i]);
    out += '\n';
  }
  return out;
}

std::string text(const RelevanceReport& r) {
  std::ostringstream os;
  os << "formula: " << to_string(r.formula) << '\n'
     << "minimal determining sets: " << join_sets(r.minimal_determining_sets) << '\n'
     << "redundant: " << to_string(r.redundant) << '\n'
     << "relevant: " << to_string(r.relevant) << '\n'
     << "t-relevant: " << (r.t_relevant ? "yes" : "no") << '\n'
     << "classification: " << to_string(r.classification) << '\n';
  return os.str();
}

std::string text(const TableauResult& r) {
  std::map<NodeId, const Branch*> leaves;
  for (const Branch& b : r.branches) leaves[b.path.back()] = &b;

  std::string out;
  // Depth-first, left child first; indentation grows at each split.
  std::vector<std::pair<NodeId, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    const auto [id, indent] = stack.back();
    stack.pop_back();
    const TableauNode& n = r.nodes[id];
    const std::string pad(indent * 2, ' ');
    out += pad + "N" + std::to_string(id) + " [" + std::string(to_string(n.rule));
    if (n.source) out += " from N" + std::to_string(*n.source);
    out += "] " + to_string(n.formula) + '\n';
    if (auto it = leaves.find(id); it != leaves.end()) {
      out += pad + (it->second->closure ? closure_line(*it->second->closure) : "open") + '\n';
    }
    const std::size_t child_indent = n.children.size() > 1 ? indent + 1 : indent;
    for (auto c = n.children.rbegin(); c != n.children.rend(); ++c) {
      stack.emplace_back(*c, child_indent);
    }
  }
  out += "outcome: " + std::string(to_string(r.outcome)) + '\n';
  if (r.outcome != Outcome::Open) out += "closing set: " + to_string(r.closing_set) + '\n';
  if (r.strategy == Strategy::Exhaustive) {
    out += "closing sets: " + (r.closing_sets.empty() ? std::string("none")
                                                       : join_sets(r.closing_sets)) + '\n';
  }
  return out;
}

std::string text(const EquivalenceVerdict& v) {
  if (v.holds()) return "EQUIVALENT\n";
  return "NOT EQUIVALENT at " + to_string(v.witness->assignment) +
         ": L=" + value_string(v.witness->formula_value) +
         ", canon=" + value_string(v.witness->canonical_value) + '\n';
}

std::string dot(const Formula& f) {
  std::string out = "digraph formula {\n  node [shape=circle];\n";
  std::size_t next = 0;
  auto visit = [&](auto&& self, const Formula& g) -> std::size_t {
    const std::size_t id = next++;
    const std::string label = g.is_variable() ? g.variable().name()
                              : g.connective() == Connective::Not
                                  ? std::string("~")
                                  : std::string(connective_name(g.connective()));
    out += "  a" + std::to_string(id) + " [label=\"" + dot_escape(label) + "\"];\n";
    if (g.connective() == Connective::Not) {
      const std::size_t c = self(self, g.operand());
      out += "  a" + std::to_string(id) + " -> a" + std::to_string(c) + ";\n";
    } else if (!g.is_variable()) {
      const std::size_t l = self(self, g.lhs());
      const std::size_t r = self(self, g.rhs());
      out += "  a" + std::to_string(id) + " -> a" + std::to_string(l) + ";\n";
      out += "  a" + std::to_string(id) + " -> a" + std::to_string(r) + ";\n";
    }
    return id;
  };
  visit(visit, f);
  out += "}\n";
  return out;
}

std::string dot(const TableauResult& r) {
  std::string out = "digraph tableau {\n  node [shape=plaintext];\n";
  for (const TableauNode& n : r.nodes) {
    out += "  n" + std::to_string(n.id) + " [label=\"N" + std::to_string(n.id) + ": " +
           dot_escape(to_string(n.formula)) + "\"];\n";
  }
  for (const TableauNode& n : r.nodes) {
    for (NodeId c : n.children) {
      out += "  n" + std::to_string(n.id) + " -> n" + std::to_string(c) + ";\n";
    }
  }
  for (std::size_t i = 0; i < r.branches.size(); ++i) {
    const Branch& b = r.branches[i];
    const std::string leaf = "n" + std::to_string(b.path.back());
    const std::string end = "b" + std::to_string(i);
    if (b.closure) {
      out += "  " + end + " [shape=box, style=filled, fillcolor=lightgray, label=\"× " +
             dot_escape(b.closure->variable.name()) + " (N" +
             std::to_string(std::min(b.closure->positive, b.closure->negative)) + ", N" +
             std::to_string(std::max(b.closure->positive, b.closure->negative)) + ")\"];\n";
    } else {
      out += "  " + end + " [shape=ellipse, label=\"open\"];\n";
    }
    out += "  " + leaf + " -> " + end + " [style=dashed];\n";
  }
  out += "}\n";
  return out;
}

std::string summary(const TruthTable& t) {
  std::string values;
  for (TruthValue v : t.values) values += to_char(v);
  return values;
}

std::string summary(const RelevanceReport& r) {
  return std::string(to_string(r.classification)) + " minimal=" +
         join_sets(r.minimal_determining_sets) + " redundant=" + to_string(r.redundant);
}

std::string summary(const TableauResult& r) {
  std::string out(to_string(r.outcome));
  if (r.outcome != Outcome::Open) out += " closing=" + to_string(r.closing_set);
  if (r.strategy == Strategy::Exhaustive && !r.closing_sets.empty()) {
    out += " all=" + join_sets(r.closing_sets);
  }
  return out;
}

std::string compact(const Json& j) { return j.dump(); }

std::string pretty(const Json& j) { return j.dump(2) + '\n'; }

}  // namespace trel::render
