#include "properties.hpp"

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "trel/kleene.hpp"
#include "trel/relevance.hpp"
#include "trel/tableau.hpp"
#include "trel/theorem.hpp"

namespace properties {

using namespace trel;

namespace {

enum CanonicalProperty { CanonicalNeverF = kFormulaProperties, NegatedDuality, kAllProperties };

std::vector<std::vector<TruthValue>> all_rows(std::size_t n) {
  return oracle::rows(n, {TruthValue::T, TruthValue::F, TruthValue::X});
}

VarSet subset(const VarSet& vars, std::uint64_t mask) {
  VarSet out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if ((mask >> i) & 1) out.push_back(vars[i]);
  }
  return out;
}

bool leq_row(const std::vector<TruthValue>& a, const std::vector<TruthValue>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!information_leq(a[i], b[i])) return false;
  }
  return true;
}

std::vector<std::string> names(const std::vector<VarSet>& sets) {
  std::vector<std::string> out;
  for (const VarSet& s : sets) out.push_back(to_string(s));
  return out;
}

std::vector<std::string> names(const oracle::Names& vars, const std::vector<std::uint64_t>& sets) {
  std::vector<std::string> out;
  for (std::uint64_t s : sets) {
    VarSet vs;
    for (const auto& n : oracle::set_names(vars, s)) vs.emplace_back(n);
    out.push_back(to_string(vs));
  }
  return out;
}

}  // namespace

const char* name(Property p) {
  switch (p) {
    case EvalAgreement: return "eval3/eval2 agreement";
    case Monotonicity: return "information-order monotonicity";
    case AllUnknownCollapse: return "all-unknown collapse";
    case SupersetMonotone: return "superset monotonicity of determining sets";
    case RedundancyShortcut: return "redundancy shortcut";
    case TableauSoundness: return "tableau soundness/completeness";
    default: return "?";
  }
}

Suite::Suite() {
  for (int p = 0; p < kFormulaProperties; ++p) reports_.push_back({name(Property(p))});
  reports_.push_back({"canonical_value never F"});
  reports_.push_back({"negated_form duality"});
}

void Suite::fail(Report& r, const std::string& what) {
  if (r.failures++ == 0) r.first_failure = what;
}

void Suite::check(const Formula& f, bool deep) {
  const VarSet vars = variables(f);
  const oracle::Names onames = oracle::names_of(f);
  const std::size_t n = vars.size();
  const Rows& cached = rows_for(vars);
  const auto& rows = cached.values;
  const auto& assignments = cached.assignments;
  struct Shown {
    const Formula& f;
    operator std::string() const { return to_string(f); }
    std::string operator+(const std::string& s) const { return to_string(f) + s; }
  } shown{f};

  std::vector<TruthValue> values(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) values[i] = evaluate(f, assignments[i]);

  bool oracle_tautology = true;
  {
    Report& r = reports_[EvalAgreement];
    ++r.cases;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const bool definite = std::all_of(rows[i].begin(), rows[i].end(),
                                        [](TruthValue v) { return is_definite(v); });
      if (!definite && !deep) continue;
      const TruthValue expected = oracle::eval(f, onames, rows[i]);
      if (definite && expected != TruthValue::T) oracle_tautology = false;
      const Assignment& a = assignments[i];
      if (values[i] != expected) fail(r, shown + " at " + to_string(a) + ": eval3 differs from table");
      if (definite && evaluate_classical(f, a) != values[i]) {
        fail(r, shown + " at " + to_string(a) + ": eval2 differs from eval3");
      }
    }
  }
  {
    Report& r = reports_[Monotonicity];
    ++r.cases;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!is_definite(values[i])) continue;
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if (values[j] != values[i] && leq_row(rows[i], rows[j])) {
          fail(r, shown + ": " + to_string(assignments[i]) + " refined to " +
                      to_string(assignments[j]) + " changes a definite value");
        }
      }
    }
  }
  {
    Report& r = reports_[AllUnknownCollapse];
    ++r.cases;
    if (values.back() != TruthValue::X) fail(r, shown + " is definite with every variable X");
  }

  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<bool> det(subsets);
  for (std::uint64_t s = 0; s < subsets; ++s) det[s] = is_determining(f, subset(vars, s));
  {
    Report& r = reports_[SupersetMonotone];
    ++r.cases;
    for (std::uint64_t s = 0; s < subsets; ++s) {
      if (deep && det[s] != oracle::determining(f, s)) {
        fail(r, shown + ": is_determining(" + to_string(subset(vars, s)) + ") disagrees with oracle");
      }
      if (!det[s]) continue;
      for (std::uint64_t t = 0; t < subsets; ++t) {
        if ((s & t) == s && !det[t]) {
          fail(r, shown + ": " + to_string(subset(vars, s)) + " determining but superset " +
                      to_string(subset(vars, t)) + " is not");
        }
      }
    }
  }
  {
    Report& r = reports_[RedundancyShortcut];
    ++r.cases;
    for (std::size_t i = 0; i < n; ++i) {
      bool omitted = false;
      for (std::uint64_t s = 0; s < subsets; ++s) {
        if (det[s] && !((s >> i) & 1)) omitted = true;
      }
      if (is_redundant(f, vars[i]) != omitted) {
        fail(r, shown + ": is_redundant(" + vars[i].name() + ") disagrees with subset search");
      }
    }
    if (deep) {
      const RelevanceReport report = analyze(f);
      const auto expected = oracle::minimal_determining(f);
      if (names(report.minimal_determining_sets) != names(onames, expected)) {
        fail(r, shown + ": minimal determining sets disagree with oracle");
      }
      for (const Variable& v : report.redundant) {
        if (!is_redundant(f, v)) fail(r, shown + ": report lists " + v.name() + " as redundant");
      }
      const bool taut = oracle::tautology(f);
      const Classification c = !taut ? Classification::NotTautology
                               : report.redundant.empty() ? Classification::TRelevantTautology
                                                          : Classification::TautologyNotTRelevant;
      if (report.classification != c) fail(r, shown + ": wrong classification");
    }
  }
  if (n <= 4) {
    Report& r = reports_[TableauSoundness];
    ++r.cases;
    const bool taut = oracle_tautology;
    const TableauResult result = refute(f);
    if ((result.outcome != Outcome::Open) != taut) {
      fail(r, shown + ": tableau outcome " + std::string(to_string(result.outcome)) +
                  " but oracle says " + (taut ? "tautology" : "not a tautology"));
    }
    if (is_tautology(f) != taut) fail(r, shown + ": is_tautology disagrees with oracle");
    for (const Branch& b : result.branches) {
      if (!b.closure) continue;
      const Closure& c = *b.closure;
      const bool on_path =
          std::find(b.path.begin(), b.path.end(), c.positive) != b.path.end() &&
          std::find(b.path.begin(), b.path.end(), c.negative) != b.path.end();
      const Formula& pos = result.nodes[c.positive].formula;
      const Formula& neg = result.nodes[c.negative].formula;
      const bool shapes = pos.is_variable() && pos.variable() == c.variable &&
                          neg.connective() == Connective::Not && neg.operand().is_variable() &&
                          neg.operand().variable() == c.variable;
      if (!on_path || !shapes) {
        fail(r, shown + ": closure pair is not V / ~V on the branch");
      }
    }
    if (deep) {
      const auto expected = names(onames, oracle::minimal_closing_sets(f));
      for (Strategy s : {Strategy::Reversed, Strategy::Exhaustive}) {
        const TableauResult other = refute(f, s);
        if ((other.outcome == Outcome::Open) != (result.outcome == Outcome::Open)) {
          fail(r, shown + ": strategies disagree on closure");
        }
        if (s == Strategy::Exhaustive && names(other.closing_sets) != expected) {
          fail(r, shown + ": exhaustive closing sets disagree with oracle");
        }
      }
      if (names(closing_sets_all(f)) != expected) {
        fail(r, shown + ": closing_sets_all disagrees with oracle");
      }
      if (result.outcome != Outcome::Open) {
        // The chosen closing set must hit every saturated branch.
        std::uint64_t chosen = 0;
        for (const Variable& v : result.closing_set) {
          chosen |= std::uint64_t{1} << (std::find(onames.begin(), onames.end(), v.name()) -
                                         onames.begin());
        }
        for (std::uint64_t conflict : oracle::branch_conflicts(f)) {
          if ((conflict & chosen) == 0) fail(r, shown + ": closing set misses a branch");
        }
      }
    }
  }
}

const Suite::Rows& Suite::rows_for(const VarSet& vars) {
  std::vector<std::string> key;
  for (const Variable& v : vars) key.push_back(v.name());
  auto it = rows_.find(key);
  if (it == rows_.end()) {
    Rows r{all_rows(vars.size()), {}};
    for (const auto& row : r.values) r.assignments.emplace_back(vars, row);
    it = rows_.emplace(std::move(key), std::move(r)).first;
  }
  return it->second;
}

void Suite::merge(const Suite& other) {
  for (std::size_t i = 0; i < reports_.size(); ++i) {
    Report& r = reports_[i];
    const Report& o = other.reports_[i];
    if (r.failures == 0 && o.failures != 0) r.first_failure = o.first_failure;
    r.cases += o.cases;
    r.failures += o.failures;
  }
}

void Suite::check_canonical(int vars) {
  VarSet all;
  for (int i = 0; i < vars; ++i) all.emplace_back("p" + std::to_string(i));
  const auto rows = all_rows(all.size());
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << all.size()); ++s) {
    const VarSet set = subset(all, s);
    const CanonicalConjunction c(set);
    const Formula canon = c.to_formula();
    const Formula dual = negated_form(set);
    for (const auto& row : rows) {
      const Assignment a(all, row);
      Report& never_f = reports_[CanonicalNeverF];
      ++never_f.cases;
      const TruthValue v = canonical_value(c, a);
      if (v == TruthValue::F || v != evaluate(canon, a)) {
        fail(never_f, to_string(set) + " at " + to_string(a) + ": canonical value " + to_char(v));
      }
      Report& duality = reports_[NegatedDuality];
      ++duality.cases;
      if (evaluate(dual, a) != kleene_not(v) ||
          evaluate(dual, a) != evaluate(Formula::negation(canon), a)) {
        fail(duality, to_string(set) + " at " + to_string(a) + ": negated form is not ~canon");
      }
    }
  }
}

void Suite::check_canonical_random(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_int_distribution<int> value(0, 2);
  for (int i = 0; i < cases; ++i) {
    const int n = size(rng);
    VarSet vars;
    std::vector<TruthValue> row;
    for (int k = 0; k < n; ++k) {
      vars.emplace_back("v" + std::to_string(k));
      row.push_back(kAllTruthValues[value(rng)]);
    }
    // Canonical set: a random nonempty prefix, so some assigned variables
    // fall outside it.
    std::uniform_int_distribution<int> prefix(1, n);
    const VarSet set(vars.begin(), vars.begin() + prefix(rng));
    const CanonicalConjunction c(set);
    const Assignment a(vars, row);
    const TruthValue v = canonical_value(c, a);
    Report& never_f = reports_[CanonicalNeverF];
    ++never_f.cases;
    if (v == TruthValue::F || v != evaluate(c.to_formula(), a)) {
      fail(never_f, to_string(set) + " at " + to_string(a));
    }
    Report& duality = reports_[NegatedDuality];
    ++duality.cases;
    if (evaluate(negated_form(set), a) != kleene_not(v)) {
      fail(duality, to_string(set) + " at " + to_string(a));
    }
  }
}

Suite run_random(std::uint64_t seed, int cases, int max_vars) {
  Suite suite;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> vars(1, max_vars);
  std::uniform_int_distribution<int> height(0, 5);
  for (int i = 0; i < cases; ++i) {
    suite.check(oracle::random_formula(rng, vars(rng), height(rng)), true);
  }
  suite.check_canonical_random(seed + 1, cases);
  return suite;
}

Suite run_exhaustive(int depth) {
  const oracle::FormulaSpace space({"P", "Q"}, depth);
  const auto size = static_cast<std::int64_t>(space.size());
  Suite suite;
#pragma omp parallel
  {
    Suite local;
#pragma omp for schedule(dynamic, 4096) nowait
    for (std::int64_t i = 0; i < size; ++i) local.check(space.at(static_cast<std::uint64_t>(i)), false);
#pragma omp critical
    suite.merge(local);
  }
  suite.check_canonical(3);
  return suite;
}

}  // namespace properties
