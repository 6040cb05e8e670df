#ifndef FNF_TESTS_SUPPORT_HPP
#define FNF_TESTS_SUPPORT_HPP

// Shared helpers for the test suites: terse builders, a reference SC
// interpreter independent of the engine, and the random program generator
// used by the cross-check suites.

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fnf/eval.hpp"
#include "fnf/gen.hpp"
#include "fnf/lang.hpp"
#include "fnf/oracle.hpp"

namespace fnf::test {

inline AExprPtr lit(Value v) { return AExpr::lit_of(v); }
inline AExprPtr reg(const std::string& r) { return AExpr::reg_of(r); }
inline AExprPtr add(AExprPtr a, AExprPtr b) {
  return AExpr::bin(AExpr::Op::Add, std::move(a), std::move(b));
}
inline BExprPtr eq(AExprPtr a, AExprPtr b) {
  return BExpr::cmp(BExpr::Op::Eq, std::move(a), std::move(b));
}

inline Action st(const Var& v, Value val) { return Action::store(v, lit(val)); }
inline Action st(const Var& v, AExprPtr e) {
  return Action::store(v, std::move(e));
}
inline Action ld(const Reg& r, const Var& v) { return Action::load(r, v); }
inline Action rop(const Reg& r, AExprPtr e) {
  return Action::regop(r, std::move(e));
}
inline Action asrt(BExprPtr c) { return Action::assertion(std::move(c)); }
inline Action fen(MemClass from, MemClass to) { return Action::fence(from, to); }

inline Event ev(ProcId pid, EventId eid, Kind k, Action a) {
  return Event{pid, eid, k, std::move(a)};
}
inline Event main_ev(ProcId pid, EventId eid, Action a) {
  return ev(pid, eid, Kind::Main, std::move(a));
}
inline Event shadow_ev(ProcId pid, EventId eid, Action a) {
  return ev(pid, eid, Kind::Shadow, std::move(a));
}

inline Program prog_of(std::vector<Action> acts) {
  Program p;
  for (auto& a : acts) p.push_back(Cmd::action(std::move(a)));
  return p;
}

inline Litmus make_litmus(std::vector<Program> procs,
                          std::map<Var, Value> init = {},
                          BExprPtr cond = BExpr::lit_of(true)) {
  Litmus l;
  l.name = "test";
  l.init = std::move(init);
  for (std::size_t i = 0; i < procs.size(); ++i)
    l.procs.emplace_back("P" + std::to_string(i + 1), std::move(procs[i]));
  l.cond = std::move(cond);
  return l;
}

inline const Litmus& dekker() {
  static Litmus l = [] {
    Litmus d = make_litmus(
        {prog_of({st("x", 1), ld("r1", "y")}),
         prog_of({st("y", 1), ld("r2", "x")})},
        {{"x", 0}, {"y", 0}},
        BExpr::conj(eq(reg("P1:r1"), lit(0)), eq(reg("P2:r2"), lit(0))));
    return d;
  }();
  return l;
}

inline SysConfig config_of(const Litmus& l, int unroll = 2) {
  std::vector<Program> expanded;
  for (const auto& [_, p] : l.procs) expanded.push_back(expand(p, unroll));
  return SysConfig::initial(std::move(expanded));
}

// ---------------------------------------------------------------------------
// Reference SC interpreter: direct interleaving of expanded programs with
// atomic actions. Independent of the gen/eval machinery.

inline void collect_names_ref(const Program& p, std::set<Reg>& regs,
                              std::set<Var>& vars) {
  for (const Cmd& c : p) {
    if (c.type == Cmd::Type::Act) {
      RegUse u = reg_use(c.act);
      regs.insert(u.reads.begin(), u.reads.end());
      regs.insert(u.writes.begin(), u.writes.end());
      if (auto v = shared_var(c.act)) vars.insert(*v);
    } else {
      if (c.cond) {
        RegUse u = reg_use(Action::assertion(c.cond));
        regs.insert(u.reads.begin(), u.reads.end());
      }
      collect_names_ref(c.body0, regs, vars);
      collect_names_ref(c.body1, regs, vars);
    }
  }
}

struct RefState {
  std::map<Var, Value> mem;
  std::vector<std::map<Reg, Value>> regs;
  std::vector<Program> residual;
};

inline void ref_walk(const Litmus& l, RefState st, std::set<Observation>& out);

inline void ref_step_proc(const Litmus& l, const RefState& st, std::size_t pid,
                          std::set<Observation>& out) {
  const Program& p = st.residual[pid];
  if (p.empty()) return;
  const Cmd& head = p.front();
  if (head.type == Cmd::Type::Choice) {
    for (const Program* branch : {&head.body0, &head.body1}) {
      RefState next = st;
      Program res = *branch;
      res.insert(res.end(), p.begin() + 1, p.end());
      next.residual[pid] = std::move(res);
      ref_step_proc(l, next, pid, out);
    }
    return;
  }
  RefState next = st;
  next.residual[pid].erase(next.residual[pid].begin());
  auto& regs = next.regs[pid];
  const Action& a = head.act;
  switch (a.type) {
    case Action::Type::Store:
      next.mem[a.var] = eval_arith(regs, *a.expr);
      break;
    case Action::Type::Load: {
      auto it = next.mem.find(a.var);
      regs[a.dst] = it == next.mem.end() ? 0 : it->second;
      break;
    }
    case Action::Type::RegOp:
      regs[a.dst] = eval_arith(regs, *a.expr);
      break;
    case Action::Type::Assert:
      if (!eval_bool(regs, *a.cond)) return;  // invalid path
      break;
    case Action::Type::Fence:
      break;
  }
  ref_walk(l, std::move(next), out);
}

// Observation over the same domains the engine reports. Tests that compare
// against the engine keep their condition names within init and the
// programs, so program/init names cover the whole domain.
inline Observation ref_observe(const Litmus& l, const RefState& st) {
  Observation obs;
  std::set<Var> vars;
  for (const auto& [v, _] : l.init) vars.insert(v);
  std::vector<std::set<Reg>> pregs(l.procs.size());
  for (std::size_t i = 0; i < l.procs.size(); ++i)
    collect_names_ref(l.procs[i].second, pregs[i], vars);
  for (const Var& v : vars) {
    auto it = st.mem.find(v);
    obs.mem[v] = it == st.mem.end() ? 0 : it->second;
  }
  for (std::size_t i = 0; i < l.procs.size(); ++i)
    for (const Reg& r : pregs[i]) {
      auto it = st.regs[i].find(r);
      obs.regs[l.procs[i].first + ":" + r] =
          it == st.regs[i].end() ? 0 : it->second;
    }
  return obs;
}

inline void ref_walk(const Litmus& l, RefState st, std::set<Observation>& out) {
  bool done = true;
  for (const auto& p : st.residual)
    if (!p.empty()) done = false;
  if (done) {
    out.insert(ref_observe(l, st));
    return;
  }
  for (std::size_t pid = 0; pid < st.residual.size(); ++pid)
    ref_step_proc(l, st, pid, out);
}

/// All final observations of the litmus under atomic-interleaving SC.
inline std::set<Observation> reference_sc_reachable(const Litmus& l,
                                                    int unroll) {
  RefState st;
  st.mem = l.init;
  st.regs.resize(l.procs.size());
  // registers read before their first write hold 0
  for (std::size_t i = 0; i < l.procs.size(); ++i) {
    std::set<Reg> regs;
    std::set<Var> vars;
    collect_names_ref(l.procs[i].second, regs, vars);
    for (const Reg& r : regs) st.regs[i][r] = 0;
  }
  for (const auto& [_, p] : l.procs) st.residual.push_back(expand(p, unroll));
  std::set<Observation> out;
  ref_walk(l, std::move(st), out);
  return out;
}

// ---------------------------------------------------------------------------
// Random litmus generator for the cross-check suites. Deterministic per
// seed; sizes stay inside the oracle limits for every model (worst case is
// RMO's two events per action).

struct RandomLitmus {
  std::mt19937_64 rng;

  explicit RandomLitmus(std::uint64_t seed) : rng(seed) {}

  int pick(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Var var() { return pick(0, 1) ? "x" : "y"; }
  Reg rg() { return pick(0, 1) ? "r1" : "r2"; }

  AExprPtr aexpr() {
    switch (pick(0, 3)) {
      case 0:
        return lit(pick(0, 2));
      case 1:
        return reg(rg());
      default:
        return add(reg(rg()), lit(pick(0, 1)));
    }
  }

  BExprPtr bexpr() { return eq(reg(rg()), lit(pick(0, 1))); }

  Action action(bool allow_fence) {
    switch (pick(0, allow_fence ? 4 : 3)) {
      case 0:
        return st(var(), aexpr());
      case 1:
        return ld(rg(), var());
      case 2:
        return rop(rg(), aexpr());
      case 3:
        return st(var(), lit(pick(0, 2)));
      default:
        return fen(pick(0, 1) ? MemClass::Store : MemClass::Load,
                   pick(0, 1) ? MemClass::Store : MemClass::Load);
    }
  }

  // One candidate; the caller filters on event budget.
  Litmus generate(bool with_conditional) {
    int nprocs = pick(1, 3);
    std::vector<Program> procs;
    int cond_slot = with_conditional ? pick(0, nprocs - 1) : -1;
    for (int p = 0; p < nprocs; ++p) {
      int n = pick(1, 3);
      Program prog;
      for (int i = 0; i < n; ++i) {
        if (p == cond_slot && i == n - 1) {
          if (pick(0, 1)) {
            prog.push_back(Cmd::branch(bexpr(), prog_of({action(false)}),
                                       pick(0, 1) ? prog_of({action(false)})
                                                  : Program{}));
          } else {
            prog.push_back(Cmd::loop(bexpr(), prog_of({action(false)})));
          }
        } else {
          prog.push_back(Cmd::action(action(true)));
        }
      }
      procs.push_back(std::move(prog));
    }
    return make_litmus(std::move(procs), {{"x", 0}, {"y", 0}});
  }
};

/// Loose upper bound on how many interleavings the worst model admits:
/// multinomial over per-processor event counts, doubled once per
/// two-stage-capable action for the local reorderings.
inline double interleaving_bound(const Litmus& l, int unroll) {
  Architecture rmo = Architecture::rmo();
  std::vector<int> per_proc;
  for (const auto& [_, p] : l.procs) {
    Program e = expand(p, unroll);
    SysConfig one = SysConfig::initial({e});
    per_proc.push_back(oracle::max_total_events(rmo, one));
  }
  double bound = 1.0;
  int placed = 0;
  for (int n : per_proc) {
    for (int i = 1; i <= n; ++i) {
      ++placed;
      bound *= static_cast<double>(placed) / i;
    }
    bound *= static_cast<double>(1 << (n / 2));  // local order slack
  }
  return bound;
}

/// Deterministic corpus of `count` litmus tests whose worst-case event
/// count stays within the oracle limit under every model, and whose
/// brute-force state space stays desk-sized.
inline std::vector<Litmus> random_corpus(std::size_t count, int unroll,
                                         std::uint64_t seed_base = 20240901) {
  std::vector<Litmus> out;
  std::uint64_t seed = seed_base;
  Architecture rmo = Architecture::rmo();
  while (out.size() < count) {
    RandomLitmus gen(seed++);
    Litmus l = gen.generate(gen.pick(0, 3) == 0);
    SysConfig c0 = config_of(l, unroll);
    if (oracle::max_total_events(rmo, c0) > oracle::kMaxTotalEvents) continue;
    if (interleaving_bound(l, unroll) > 40000) continue;
    out.push_back(std::move(l));
  }
  return out;
}

}  // namespace fnf::test

#endif
