#include "doctest.h"
#include "support.hpp"

#include "fnf/render.hpp"
#include "fnf/report.hpp"

using namespace fnf;
using namespace fnf::test;

TEST_CASE("run report json round-trips") {
  RunReport r = make_run_report(dekker(), Architecture::tso(), 2, 100000);
  std::string j = to_json(r);
  RunReport back = run_report_from_json(j);
  CHECK(back == r);
  CHECK(to_json(back) == j);
}

TEST_CASE("identical invocations produce identical reports") {
  RunReport a = make_run_report(dekker(), Architecture::pso(), 2, 100000);
  RunReport b = make_run_report(dekker(), Architecture::pso(), 2, 100000);
  CHECK(to_json(a) == to_json(b));
  CHECK(to_text(a) == to_text(b));
}

TEST_CASE("report contents for dekker tso") {
  RunReport r = make_run_report(dekker(), Architecture::tso(), 2, 100000);
  CHECK(r.architecture == "tso");
  CHECK(r.normal_executions == 4);
  CHECK(r.stuck_paths == 0);
  CHECK_FALSE(r.all_executions.has_value());
  CHECK(r.condition_verdict);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == "(ac)(bd)(a'c')");
  CHECK(r.observations.size() == 4);
  // observations sorted
  for (std::size_t i = 0; i + 1 < r.observations.size(); ++i)
    CHECK(r.observations[i] < r.observations[i + 1]);
}

TEST_CASE("labels follow (pid, eid) order with primes for shadows") {
  std::vector<Program> expanded = {expand(dekker().procs[0].second, 1),
                                   expand(dekker().procs[1].second, 1)};
  Labeler lab(expanded);
  CHECK(lab.label(main_ev(0, 0, st("x", 1))) == "a");
  CHECK(lab.label(main_ev(0, 1, ld("r1", "y"))) == "b");
  CHECK(lab.label(main_ev(1, 0, st("y", 1))) == "c");
  CHECK(lab.label(main_ev(1, 1, ld("r2", "x"))) == "d");
  CHECK(lab.label(shadow_ev(0, 0, st("x", 1))) == "a'");
  CHECK(lab.label(shadow_ev(1, 0, st("y", 1))) == "c'");
}
