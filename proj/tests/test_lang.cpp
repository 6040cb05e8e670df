#include "doctest.h"
#include "support.hpp"

using namespace fnf;
using namespace fnf::test;

namespace {

const char* kDekkerSrc = R"(
name "dekker"
init { x = 0; y = 0; }
proc P1 { [x] := 1; r1 := [y]; }
proc P2 { [y] := 1; r2 := [x]; }
exists P1:r1 == 0 && P2:r2 == 0
)";

}  // namespace

TEST_CASE("parse dekker") {
  Litmus l = parse_litmus(kDekkerSrc);
  CHECK(l.name == "dekker");
  CHECK(l.init.at("x") == 0);
  CHECK(l.init.at("y") == 0);
  REQUIRE(l.procs.size() == 2);
  CHECK(l.procs[0].first == "P1");
  REQUIRE(l.procs[0].second.size() == 2);
  CHECK(l.procs[0].second[0].act.type == Action::Type::Store);
  CHECK(l.procs[0].second[1].act.type == Action::Type::Load);
  CHECK(l.procs[1].second[0].act.var == "y");
}

TEST_CASE("parse fence") {
  Litmus l = parse_litmus(
      "name init { } proc P1 { fence(store, load); } exists true");
  REQUIRE(l.procs.size() == 1);
  REQUIRE(l.procs[0].second.size() == 1);
  const Action& a = l.procs[0].second[0].act;
  CHECK(a.type == Action::Type::Fence);
  CHECK(a.fence_from == MemClass::Store);
  CHECK(a.fence_to == MemClass::Load);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(
      parse_litmus("name init { } proc P1 { [x := 1; } exists true"),
      ParseError);
  try {
    parse_litmus("name init { }\nproc P1 { [x := 1; }\nexists true");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  // duplicate processor name
  CHECK_THROWS_AS(parse_litmus("name init { } proc P { } proc P { } exists true"),
                  ParseError);
  // condition register qualified with an unknown processor
  CHECK_THROWS_AS(
      parse_litmus("name init { } proc P1 { r1 := 0; } exists Q9:r1 == 0"),
      ParseError);
}

TEST_CASE("parse of printed litmus is identity") {
  for (const char* src :
       {kDekkerSrc,
        "name \"t\" init { x = 5; } proc A { r1 := [x]; if r1 == 5 { [y] := "
        "r1 + 1; } else { while r1 < 3 { r1 := r1 + 1; } } fence(load, "
        "store); } exists t_done == 1 && A:r1 >= 0"}) {
    Litmus l1 = parse_litmus(src);
    Litmus l2 = parse_litmus(print_litmus(l1));
    CHECK(l1.name == l2.name);
    CHECK(l1.init == l2.init);
    REQUIRE(l1.procs.size() == l2.procs.size());
    for (std::size_t i = 0; i < l1.procs.size(); ++i) {
      CHECK(l1.procs[i].first == l2.procs[i].first);
      CHECK(equal(l1.procs[i].second, l2.procs[i].second));
    }
    CHECK(equal(*l1.cond, *l2.cond));
  }
}

TEST_CASE("expand if") {
  // If(r1==0, [Store x 1], []) becomes a choice of assert-guarded branches.
  Program p;
  p.push_back(Cmd::branch(eq(reg("r1"), lit(0)), prog_of({st("x", 1)}), {}));
  Program e = expand(p, 2);
  REQUIRE(e.size() == 1);
  REQUIRE(e[0].type == Cmd::Type::Choice);
  const Program& left = e[0].body0;
  const Program& right = e[0].body1;
  REQUIRE(left.size() == 2);
  CHECK(left[0].act.type == Action::Type::Assert);
  CHECK(equal(*left[0].act.cond, *eq(reg("r1"), lit(0))));
  CHECK(left[1].act.type == Action::Type::Store);
  REQUIRE(right.size() == 1);
  CHECK(right[0].act.type == Action::Type::Assert);
  CHECK(right[0].act.cond->op == BExpr::Op::Not);
}

TEST_CASE("expand while at bound zero keeps only the exit assertion") {
  Program p;
  p.push_back(Cmd::loop(eq(reg("r1"), lit(0)), prog_of({st("x", 1)})));
  Program e = expand(p, 0);
  REQUIRE(e.size() == 1);
  CHECK(e[0].type == Cmd::Type::Act);
  CHECK(e[0].act.type == Action::Type::Assert);
  CHECK(e[0].act.cond->op == BExpr::Op::Not);
}

TEST_CASE("expand leaves straight-line programs unchanged") {
  Program p = prog_of({st("x", 1), ld("r1", "y")});
  CHECK(equal(expand(p, 2), p));
}

TEST_CASE("expand is idempotent") {
  for (int bound : {0, 1, 2}) {
    Program p;
    p.push_back(Cmd::action(ld("r1", "x")));
    p.push_back(Cmd::loop(eq(reg("r1"), lit(0)),
                          prog_of({rop("r1", add(reg("r1"), lit(1)))})));
    p.push_back(Cmd::branch(eq(reg("r1"), lit(2)), prog_of({st("y", 1)}),
                            prog_of({st("y", 2)})));
    Program once = expand(p, bound);
    CHECK(is_expanded(once));
    CHECK(equal(expand(once, bound), once));
  }
}

namespace {

// Count non-assert actions along every symbolic path of an expanded program.
void path_action_counts(const Program& p, std::size_t from, int sofar,
                        std::vector<int>& out) {
  if (from >= p.size()) {
    out.push_back(sofar);
    return;
  }
  const Cmd& c = p[from];
  if (c.type == Cmd::Type::Act) {
    int w = c.act.type == Action::Type::Assert ? 0 : 1;
    path_action_counts(p, from + 1, sofar + w, out);
    return;
  }
  for (const Program* b : {&c.body0, &c.body1}) {
    std::vector<int> branch;
    path_action_counts(*b, 0, 0, branch);
    for (int n : branch) path_action_counts(p, from + 1, sofar + n, out);
  }
}

int body_size(const Program& p) {
  int m = 1;
  for (const Cmd& c : p) {
    if (c.type == Cmd::Type::While || c.type == Cmd::Type::If)
      m = std::max({m, body_size(c.body0), body_size(c.body1),
                    static_cast<int>(c.body0.size()),
                    static_cast<int>(c.body1.size())});
  }
  return m;
}

}  // namespace

TEST_CASE("expansion is finite and bounded") {
  for (int bound : {0, 1, 2, 3}) {
    Program p;
    p.push_back(Cmd::action(ld("r1", "x")));
    p.push_back(Cmd::loop(eq(reg("r1"), lit(0)),
                          prog_of({rop("r1", add(reg("r1"), lit(1))),
                                   st("x", reg("r1"))})));
    Program e = expand(p, bound);
    std::vector<int> counts;
    path_action_counts(e, 0, 0, counts);  // terminating: expansion is finite
    int limit = static_cast<int>(p.size()) * (bound + 1) * body_size(p);
    for (int n : counts) CHECK(n <= limit);
  }
}

TEST_CASE("eval") {
  std::map<Reg, Value> regs{{"r1", 3}};
  CHECK(eval_arith(regs, *add(reg("r1"), lit(1))) == 4);
  std::map<Reg, Value> zeros{{"r1", 0}, {"r2", 0}};
  CHECK(eval_bool(zeros, *BExpr::conj(eq(reg("r1"), lit(0)),
                                      eq(reg("r2"), lit(0)))));
  std::map<Reg, Value> empty;
  CHECK(eval_arith(empty, *lit(7)) == 7);
  CHECK_THROWS_AS(eval_arith(empty, *reg("r9")), UnboundName);
}
