#include "doctest.h"
#include "support.hpp"

using namespace fnf;
using namespace fnf::test;

namespace {

// Dekker events under SC: a, b on P1 and c, d on P2.
Event dk_a() { return main_ev(0, 0, st("x", 1)); }
Event dk_b() { return main_ev(0, 1, ld("r1", "y")); }
Event dk_c() { return main_ev(1, 0, st("y", 1)); }
Event dk_d() { return main_ev(1, 1, ld("r2", "x")); }

CheckerState must_extend(const Architecture& a, const CheckerState& st,
                         const Event& e) {
  auto n = checker_extend(a, st, e);
  REQUIRE(n.has_value());
  return *n;
}

}  // namespace

TEST_CASE("indep") {
  Architecture sc = Architecture::sc();
  Context empty;
  CHECK(indep(sc, empty, dk_a(), dk_c()));
  CHECK_FALSE(indep(sc, empty, dk_b(), dk_c()));  // both touch y
  // A buffered write passes its processor's later read under tso.
  Architecture tso = Architecture::tso();
  CHECK(indep(tso, empty, shadow_ev(0, 0, st("x", 1)), main_ev(0, 1, ld("r1", "y"))));
}

TEST_CASE("checker_init accepts any first event") {
  Architecture sc = Architecture::sc();
  CheckerState st = checker_init();
  CHECK(st.step_count == 0);
  for (const Event& e : {dk_a(), dk_b(), dk_c(), dk_d()}) {
    auto n = checker_extend(sc, st, e);
    CHECK(n.has_value());
    CHECK(n->step_count == 1);
  }
  CHECK(is_foata_normal(sc, {}));
}

TEST_CASE("checker rejects non-canonical interleavings") {
  Architecture sc = Architecture::sc();
  // after (c), adding a cannot give a normal form: neither (ca) nor (c)(a)
  CheckerState st = must_extend(sc, checker_init(), dk_c());
  CHECK_FALSE(checker_extend(sc, st, dk_a()).has_value());
  // after (ac)(d), b fails both step conditions
  CheckerState s2 = checker_init();
  s2 = must_extend(sc, s2, dk_a());
  s2 = must_extend(sc, s2, dk_c());
  s2 = must_extend(sc, s2, dk_d());
  CHECK_FALSE(checker_extend(sc, s2, dk_b()).has_value());
}

TEST_CASE("checker groups a buffered flush with a read under tso") {
  Architecture tso = Architecture::tso();
  CheckerState cs = checker_init();
  cs = must_extend(tso, cs, dk_a());
  cs = must_extend(tso, cs, dk_c());
  CHECK(cs.step_count == 1);
  cs = must_extend(tso, cs, shadow_ev(0, 0, st("x", 1)));  // a'
  CHECK(cs.step_count == 2);
  cs = must_extend(tso, cs, dk_b());  // joins (a'b)
  CHECK(cs.step_count == 2);
  CHECK(cs.curr_step.size() == 2);
}

TEST_CASE("is_foata_normal on dekker strings") {
  Architecture sc = Architecture::sc();
  CHECK(is_foata_normal(sc, {dk_a(), dk_c(), dk_b(), dk_d()}));
  CHECK_FALSE(is_foata_normal(sc, {dk_c(), dk_a(), dk_b(), dk_d()}));
  CHECK(is_foata_normal(sc, {dk_a(), dk_b(), dk_c(), dk_d()}));
}

TEST_CASE("rejection is prefix-monotone") {
  Architecture sc = Architecture::sc();
  Execution bad = {dk_c(), dk_a()};  // rejected prefix
  CHECK_FALSE(is_foata_normal(sc, bad));
  for (const Event& e1 : {dk_b(), dk_d()})
    for (const Event& e2 : {dk_b(), dk_d()}) {
      if (e1.eid == e2.eid) continue;
      Execution ext = bad;
      ext.push_back(e1);
      ext.push_back(e2);
      CHECK_FALSE(is_foata_normal(sc, ext));
    }
}

TEST_CASE("decompose") {
  Architecture sc = Architecture::sc();
  auto steps = decompose(sc, {dk_a(), dk_c(), dk_b(), dk_d()});
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].size() == 2);
  CHECK(steps[1].size() == 2);
  CHECK(steps[0][0].eid == 0);
  CHECK(steps[0][0].pid == 0);
  CHECK(steps[0][1].pid == 1);

  auto single = decompose(sc, {dk_a()});
  REQUIRE(single.size() == 1);
  CHECK(single[0].size() == 1);

  // tso witness (ac)(bd)(a'c')
  Architecture tso = Architecture::tso();
  Execution wit = {dk_a(), dk_c(), dk_b(), dk_d(),
                   shadow_ev(0, 0, st("x", 1)), shadow_ev(1, 0, st("y", 1))};
  auto tso_steps = decompose(tso, wit);
  REQUIRE(tso_steps.size() == 3);
  CHECK(tso_steps[2].size() == 2);
  CHECK(is_shadow(tso_steps[2][0]));
}

TEST_CASE("accepted states keep the current step independent and sorted") {
  for (const Architecture& arch :
       {Architecture::sc(), Architecture::tso(), Architecture::rmo()}) {
    SysConfig c0 = config_of(dekker(), 1);
    for_each_normal_execution(arch, c0, [&](const Execution& es) {
      CheckerState st = checker_init();
      for (const Event& e : es) {
        auto n = checker_extend(arch, st, e);
        REQUIRE(n.has_value());
        st = *n;
        for (std::size_t i = 0; i < st.curr_step.size(); ++i) {
          for (std::size_t j = i + 1; j < st.curr_step.size(); ++j) {
            CHECK(indep(arch, st.ctx_before_curr, st.curr_step[i],
                        st.curr_step[j]));
            CHECK(arch.prec(st.curr_step[i], st.curr_step[j]));
          }
        }
      }
      return true;
    });
  }
}

TEST_CASE("contexts are a pure fold, invariant under independent swaps") {
  for (const Architecture& arch :
       {Architecture::tso(), Architecture::pso(), Architecture::rmo()}) {
    SysConfig c0 = config_of(dekker(), 1);
    oracle::ExecSet all = oracle::all_executions(arch, c0);
    int checked = 0;
    for (const auto& es : all.execs) {
      Context ctx;
      for (std::size_t i = 0; i + 1 < es.size(); ++i) {
        if (indep(arch, ctx, es[i], es[i + 1])) {
          Context a = ctx, b = ctx;
          a.apply(arch, es[i]);
          a.apply(arch, es[i + 1]);
          b.apply(arch, es[i + 1]);
          b.apply(arch, es[i]);
          CHECK(a == b);
          ++checked;
        }
        ctx.apply(arch, es[i]);
      }
      if (checked > 200) break;
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("checker agrees with the exhaustive definition on small programs") {
  // Full-scale agreement runs in the acceptance suite; this is a smoke
  // version on the dekker executions.
  for (const Architecture& arch : {Architecture::sc(), Architecture::tso()}) {
    SysConfig c0 = config_of(dekker(), 1);
    oracle::ExecSet all = oracle::all_executions(arch, c0);
    for (const auto& es : all.execs)
      CHECK(is_foata_normal(arch, es) == oracle::normal_by_definition(arch, es));
  }
}
