// Serial against OpenMP kernels on formulas with many variables.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trel/kernels.hpp"
#include "trel/relevance.hpp"
#include "trel/theorem.hpp"

using namespace trel;
using kernels::Execution;

namespace {

double best_ms(int repeat, const std::function<void()>& fn) {
  double best = 0;
  for (int i = 0; i < repeat; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start;
    if (i == 0 || d.count() < best) best = d.count();
  }
  return best;
}

// p0 -> (p1 -> ... (p{n-1} -> p0)): a tautology where only p0 matters.
Formula weakening_chain(const VarSet& vars) {
  Formula f = Formula::variable(vars.front());
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) f = Formula::implication(Formula::variable(*it), f);
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  int vars = 12;
  int repeat = 3;
  CLI::App app{"Kernel timings, serial against parallel."};
  app.add_option("--vars", vars, "Variables in the benchmark formulas")->check(CLI::Range(2, 20));
  app.add_option("--repeat", repeat, "Runs per measurement; the best is kept")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  VarSet columns;
  for (int i = 0; i < vars; ++i) columns.emplace_back("p" + std::to_string(i));
  const Formula chain = weakening_chain(columns);
  const Formula canon = CanonicalConjunction(columns).to_formula();
  const kernels::Program program(chain, columns);
  const kernels::Program canon_program(canon, columns);
  const kernels::RowSpace full(std::vector(columns.size(), kernels::ColumnDomain::full()));
  const kernels::RowSpace definite(std::vector(columns.size(), kernels::ColumnDomain::definite()));
  std::vector<TruthValue> out(full.size());
  Limits limits;
  limits.max_three_valued_vars = limits.max_two_valued_vars = static_cast<std::size_t>(vars);

  struct Case {
    const char* name;
    std::uint64_t rows;  // 0 when not a single scan
    std::function<void(Execution)> run;
  };
  const std::vector<Case> cases = {
      {"table (3^n rows)", full.size(),
       [&](Execution e) { kernels::evaluate_rows(program, full, out, e); }},
      {"tautology scan (2^n rows)", definite.size(),
       [&](Execution e) {
         kernels::find_first_outside(program, definite, mask_of(TruthValue::T), e);
       }},
      {"mismatch scan (3^n rows)", full.size(),
       [&](Execution e) { kernels::find_first_mismatch(canon_program, canon_program, full, e); }},
      {"relevance analysis", 0, [&](Execution e) { analyze(chain, limits, e); }},
  };

  std::printf("variables %d, threads %d, best of %d\n", vars, kernels::worker_count(), repeat);
  std::printf("%-28s %12s %12s %12s %8s\n", "kernel", "rows", "serial ms", "parallel ms", "speedup");
  for (const Case& c : cases) {
    const double s = best_ms(repeat, [&] { c.run(Execution::Serial); });
    const double p = best_ms(repeat, [&] { c.run(Execution::Parallel); });
    const std::string rows = c.rows == 0 ? "-" : std::to_string(c.rows);
    std::printf("%-28s %12s %12.3f %12.3f %8.2f\n", c.name, rows.c_str(), s, p,
                p > 0 ? s / p : 0.0);
  }
  return 0;
}
