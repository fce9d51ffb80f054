#include "trel/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "trel/error.hpp"
#include "trel/kleene.hpp"
#include "trel/parser.hpp"
#include "trel/relevance.hpp"
#include "trel/render.hpp"
#include "trel/tableau.hpp"
#include "trel/theorem.hpp"

namespace trel::cli {

namespace {

using render::Json;

enum class Format { Text, Json, Dot };

struct Options {
  std::string command;
  Format format = Format::Text;
  bool each = false;
  Limits limits;
  std::vector<std::string> positionals;
  std::string mode;
  std::string vary;
  std::string strategy = "default";
  std::string set;
  bool from_tableau = false;
};

// One command's rendering of one formula.
struct Report {
  std::string output;
  int code = kSuccess;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

VarSet parse_variable_list(std::string_view text) {
  VarSet out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string name = trim(text.substr(pos, end - pos));
    if (!name.empty()) out.emplace_back(name);
    pos = end + 1;
  }
  return out;
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

Strategy parse_strategy(std::string_view s) {
  if (s == "default") return Strategy::Default;
  if (s == "reversed") return Strategy::Reversed;
  if (s == "exhaustive") return Strategy::Exhaustive;
  throw UsageError("unknown strategy '" + std::string(s) + "'");
}

bool single(const Options& o) { return !o.each; }

Report render_doc(const Options& o, const Json& doc, const std::string& text, int code) {
  if (o.format == Format::Json) return {single(o) ? render::pretty(doc) : render::compact(doc), code};
  return {text, code};
}

void require_no_dot(const Options& o) {
  if (o.format == Format::Dot) throw UsageError("--format dot is only available for parse and tableau");
}

Report cmd_parse(const Options& o, const Formula& f) {
  if (o.format == Format::Dot) {
    if (!single(o)) throw UsageError("--format dot cannot be combined with --each");
    return {render::dot(f), kSuccess};
  }
  return render_doc(o, render::to_json(f), to_string(f) + (single(o) ? "\n" : ""), kSuccess);
}

Report cmd_eval(const Options& o, const Formula& f, const std::string& assignment_text) {
  require_no_dot(o);
  Assignment a;
  try {
    a = parse_assignment(assignment_text);
  } catch (const ParseError& e) {
    throw ArgumentError(std::string("invalid assignment: ") + e.what());
  }
  const VarSet vars = variables(f);
  for (const auto& [var, value] : a.entries()) {
    if (std::find(vars.begin(), vars.end(), var) == vars.end()) {
      throw ArgumentError("unknown variable '" + var.name() + "' in assignment");
    }
  }
  const TruthValue value = evaluate(f, a);
  Json assignment = Json::object();
  for (const Variable& v : vars) assignment[v.name()] = std::string(1, to_char(a.at(v)));
  const Json doc{{"formula", to_string(f)},
                 {"assignment", std::move(assignment)},
                 {"value", std::string(1, to_char(value))}};
  return render_doc(o, doc, std::string(1, to_char(value)) + (single(o) ? "\n" : ""), kSuccess);
}

Report cmd_table(const Options& o, const Formula& f) {
  require_no_dot(o);
  TableMode mode = TableMode::Classical;
  if (o.mode.empty()) {
    if (!o.vary.empty()) mode = TableMode::Partial;
  } else if (o.mode == "classical") {
    mode = TableMode::Classical;
  } else if (o.mode == "three") {
    mode = TableMode::ThreeValued;
  } else if (o.mode == "partial") {
    mode = TableMode::Partial;
  } else {
    throw UsageError("unknown table mode '" + o.mode + "'");
  }
  const TruthTable t = table(f, mode, parse_variable_list(o.vary), o.limits);
  return render_doc(o, render::to_json(t), single(o) ? render::table_tsv(t) : render::summary(t),
                    kSuccess);
}

Report cmd_relevance(const Options& o, const Formula& f) {
  require_no_dot(o);
  const RelevanceReport r = analyze(f, o.limits);
  const int code = r.classification == Classification::TRelevantTautology ? kSuccess : kNegative;
  return render_doc(o, render::to_json(r), single(o) ? render::text(r) : render::summary(r), code);
}

int tableau_code(Outcome outcome) {
  switch (outcome) {
    case Outcome::ProvedTrue: return kSuccess;
    case Outcome::ProvedNotFalse: return kNegative;
    case Outcome::Open: return kOpen;
  }
  return kError;
}

Report cmd_tableau(const Options& o, const Formula& f) {
  const TableauResult r = refute(f, parse_strategy(o.strategy), o.limits);
  const int code = tableau_code(r.outcome);
  if (o.format == Format::Dot) {
    if (!single(o)) throw UsageError("--format dot cannot be combined with --each");
    return {render::dot(r), code};
  }
  return render_doc(o, render::to_json(r), single(o) ? render::text(r) : render::summary(r), code);
}

Report cmd_check(const Options& o, const Formula& f) {
  require_no_dot(o);
  VarSet set;
  if (o.from_tableau) {
    if (!o.set.empty()) throw UsageError("--set and --from-tableau are mutually exclusive");
    const TableauResult r = refute(f, parse_strategy(o.strategy), o.limits);
    if (r.outcome == Outcome::Open) {
      throw ArgumentError("the tableau does not close, so there is no closing set to check");
    }
    set = r.closing_set;
  } else {
    if (o.set.empty()) throw UsageError("check needs --set R1,R2,... or --from-tableau");
    set = parse_variable_list(o.set);
  }
  const EquivalenceVerdict v = check_equivalence(f, set, o.limits);
  std::string text = render::text(v);
  if (!single(o)) text.pop_back();
  return render_doc(o, render::to_json(v), text, v.holds() ? kSuccess : kNegative);
}

Report dispatch(const Options& o, const Formula& f, const std::string& assignment) {
  if (o.command == "parse") return cmd_parse(o, f);
  if (o.command == "eval") return cmd_eval(o, f, assignment);
  if (o.command == "table") return cmd_table(o, f);
  if (o.command == "relevance") return cmd_relevance(o, f);
  if (o.command == "tableau") return cmd_tableau(o, f);
  return cmd_check(o, f);
}

// Runs one formula; errors become diagnostics and exit code 1.
Report run_one(const Options& o, const std::string& formula_text, const std::string& assignment,
               std::string& diagnostic) {
  try {
    const Formula f = parse(formula_text);
    return dispatch(o, f, assignment);
  } catch (const ParseError& e) {
    diagnostic = describe(e, formula_text);
  } catch (const Error& e) {
    diagnostic = std::string("error: ") + e.what();
  }
  return {{}, kError};
}

int combine(int a, int b) {
  if (a == kError || b == kError) return kError;
  return std::max(a, b);
}

int run_batch(const Options& o, const std::string& assignment, std::istream& in,
              std::ostream& out, std::ostream& err) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    lines.push_back(std::move(line));
  }

  std::vector<Report> reports(lines.size());
  std::vector<std::string> diagnostics(lines.size());
  const auto count = static_cast<std::int64_t>(lines.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    reports[i] = run_one(o, lines[i], assignment, diagnostics[i]);
  }

  int code = kSuccess;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Report& r = reports[i];
    if (!diagnostics[i].empty()) {
      err << "line " << (i + 1) << ": " << diagnostics[i] << '\n';
      if (o.format == Format::Json) {
        out << render::compact(Json{{"input", lines[i]}, {"error", diagnostics[i]}}) << '\n';
      } else {
        out << lines[i] << "\terror\n";
      }
    } else if (o.format == Format::Json) {
      out << r.output << '\n';
    } else {
      // Echo the canonical formula beside the one-line result.
      out << to_string(parse(lines[i])) << '\t' << r.output << '\n';
    }
    code = i == 0 ? r.code : combine(code, r.code);
  }
  return code;
}

void apply_environment(Limits& limits, const EnvLookup& env) {
  if (auto v = env("TREL_MAX_VARS")) {
    const std::size_t n = parse_count(*v, "TREL_MAX_VARS");
    limits.max_three_valued_vars = limits.max_two_valued_vars = n;
  }
  if (auto v = env("TREL_MAX_NODES")) {
    limits.max_tableau_nodes = parse_count(*v, "TREL_MAX_NODES");
  }
}

}  // namespace

EnvLookup process_environment() {
  return [](std::string_view name) -> std::optional<std::string> {
    const char* value = std::getenv(std::string(name).c_str());
    if (value == nullptr) return std::nullopt;
    return std::string(value);
  };
}

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err,
        const EnvLookup& env) {
  Options o;
  std::string format = "text";
  std::string max_vars;
  std::string max_nodes;

  CLI::App app{"Truth-relevant propositional logic: strong-table evaluation, truth-determining "
               "sets, tableaux and canonical-conjunction checks.",
               "trel"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--max-vars", max_vars, "Variable cap for truth-table enumeration");
  app.add_option("--max-nodes", max_nodes, "Node budget for tableaux");
  app.add_flag("--each", o.each, "Read one formula per line from standard input");

  auto add = [&](const char* name, const char* help, const char* positional_help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("args", o.positionals, positional_help);
    return sub;
  };
  add("parse", "Parse and print a formula", "FORMULA (or - for standard input)");
  add("eval", "Evaluate under an assignment such as P=T,Q=X", "FORMULA ASSIGNMENT");
  CLI::App* table_cmd = add("table", "Print a truth table", "FORMULA");
  table_cmd->add_option("--mode", o.mode, "classical, three or partial")
      ->check(CLI::IsMember({"classical", "three", "partial"}));
  table_cmd->add_option("--vary", o.vary, "Variables that range over T/F in partial mode");
  add("relevance", "Truth-determining sets, redundancy and classification", "FORMULA");
  CLI::App* tableau_cmd = add("tableau", "Refutation tree for the negated formula", "FORMULA");
  tableau_cmd->add_option("--strategy", o.strategy, "default, reversed or exhaustive")
      ->check(CLI::IsMember({"default", "reversed", "exhaustive"}));
  CLI::App* check_cmd = add("check", "Compare against the canonical conjunction of a set", "FORMULA");
  check_cmd->add_option("--set", o.set, "Comma-separated variables R1,R2,...");
  check_cmd->add_flag("--from-tableau", o.from_tableau, "Use the tableau's closing set");
  check_cmd->add_option("--strategy", o.strategy, "Tableau strategy for --from-tableau")
      ->check(CLI::IsMember({"default", "reversed", "exhaustive"}));

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kError;
  }

  try {
    o.command = app.get_subcommands().front()->get_name();
    o.format = format == "json" ? Format::Json : format == "dot" ? Format::Dot : Format::Text;
    apply_environment(o.limits, env);
    if (!max_vars.empty()) {
      o.limits.max_three_valued_vars = o.limits.max_two_valued_vars =
          parse_count(max_vars, "--max-vars");
    }
    if (!max_nodes.empty()) o.limits.max_tableau_nodes = parse_count(max_nodes, "--max-nodes");

    const std::size_t expected = o.command == "eval" ? 2 : 1;
    if (o.each) {
      if (o.positionals.size() != expected - 1) {
        throw UsageError(o.command == "eval" ? "with --each, eval takes only ASSIGNMENT"
                                             : "with --each, the formula comes from standard input");
      }
      return run_batch(o, o.command == "eval" ? o.positionals.front() : std::string(), in, out, err);
    }
    if (o.positionals.size() != expected) {
      throw UsageError(o.command == "eval" ? "eval takes FORMULA ASSIGNMENT" : "expected one FORMULA");
    }
    std::string formula_text = o.positionals.front();
    if (formula_text == "-") {
      formula_text = trim(std::string(std::istreambuf_iterator<char>(in), {}));
    }
    std::string diagnostic;
    const Report r =
        run_one(o, formula_text, expected == 2 ? o.positionals.back() : std::string(), diagnostic);
    if (!diagnostic.empty()) {
      err << diagnostic << '\n';
      return kError;
    }
    out << r.output;
    return r.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace trel::cli
