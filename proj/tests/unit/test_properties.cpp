#include "doctest.h"
#include "oracle.hpp"
#include "properties.hpp"

namespace {

void require_clean(const properties::Suite& suite, bool formulas_only = false) {
  for (const auto& r : suite.reports()) {
    if (formulas_only && &r - suite.reports().data() >= properties::kFormulaProperties) break;
    INFO(r.name << ": " << r.failures << "/" << r.cases << " failed; first: " << r.first_failure);
    CHECK(r.ok());
  }
}

}  // namespace

TEST_CASE("random formulas, 10^4 cases with oracle cross-checks") {
  require_clean(properties::run_random(20240611, 10000, 4));
}

TEST_CASE("random formulas, second seed") {
  require_clean(properties::run_random(7, 2000, 3));
}

TEST_CASE("every formula of depth <= 3 on two variables, with oracle cross-checks") {
  properties::Suite suite;
  std::uint64_t seen = 0;
  oracle::for_each_formula({"P", "Q"}, 3, [&](const trel::Formula& f) {
    suite.check(f, true);
    ++seen;
  });
  CHECK(seen == oracle::count_formulas(2, 3));
  require_clean(suite, true);
}

TEST_CASE("canonical conjunctions over three variables") {
  properties::Suite suite;
  suite.check_canonical(3);
  const auto& reports = suite.reports();
  for (std::size_t i = properties::kFormulaProperties; i < reports.size(); ++i) {
    INFO(reports[i].name << ": " << reports[i].first_failure);
    CHECK(reports[i].ok());
  }
}
