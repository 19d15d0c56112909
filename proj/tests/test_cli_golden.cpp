#include "doctest.h"
#include "golden_runner.hpp"

TEST_CASE("every fixture x command pair reproduces its golden report") {
  const auto outcomes = freemod::golden::run_all();
  REQUIRE_FALSE(outcomes.empty());
  for (const auto& o : outcomes) {
    const std::string what = o.name + ": " + o.message;
    CHECK_MESSAGE(o.ok, what);
  }
}

TEST_CASE("reports are byte-identical across repeated runs") {
  using freemod::golden::run_cli;
  for (const char* args :
       {"check-axioms fixtures/chain3.structure", "find-basis fixtures/diamond.structure",
        "--format machine check-semiring fixtures/gf2.semiring"}) {
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CHECK(first.output == second.output);
    CHECK(first.exit_code == second.exit_code);
  }
}
