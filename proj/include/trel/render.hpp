#pragma once

// Text, structured (JSON) and DOT renderings of every result type.

#include <string>

#include "json.hpp"

#include "trel/formula.hpp"
#include "trel/kleene.hpp"
#include "trel/relevance.hpp"
#include "trel/tableau.hpp"
#include "trel/theorem.hpp"

namespace trel::render {

// Field order is part of the output contract, so documents keep insertion order.
using Json = nlohmann::ordered_json;

Json ast_json(const Formula& f);
Json to_json(const Formula& f);  // formula, variables, ast
Json to_json(const TruthTable& t);
Json to_json(const RelevanceReport& r);
Json to_json(const TableauResult& r);
Json to_json(const EquivalenceVerdict& v);

// Header row of variable names then "value", tab separated; x for unknown.
std::string table_tsv(const TruthTable& t);
std::string text(const RelevanceReport& r);
// One line per node, "N<id> [<rule> from N<source>] <formula>", indented
// by branching depth, with a closure line under each closed leaf.
std::string text(const TableauResult& r);
// "EQUIVALENT" or "NOT EQUIVALENT at <assignment>: L=<v>, canon=<v>".
std::string text(const EquivalenceVerdict& v);

std::string dot(const Formula& f);
std::string dot(const TableauResult& r);

// Single-line forms used by batch mode.
std::string summary(const TruthTable& t);
std::string summary(const RelevanceReport& r);
std::string summary(const TableauResult& r);

// Compact rendering of a structured document (one line).
std::string compact(const Json& j);
// Pretty rendering (two-space indent, trailing newline).
std::string pretty(const Json& j);

}  // namespace trel::render
