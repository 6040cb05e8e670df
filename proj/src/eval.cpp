#include "fnf/eval.hpp"

#include <algorithm>
#include <cassert>

namespace fnf {

ValueCycleError::ValueCycleError()
    : std::runtime_error(
          "cyclic value dependency: the execution would need a value out of "
          "thin air") {}

ExecutionLimitError::ExecutionLimitError(std::size_t limit)
    : std::runtime_error("normal-execution limit exceeded (" +
                         std::to_string(limit) + ")") {}

namespace {

std::optional<Value> resolve_impl(const ValuePtr& cell,
                                  std::set<const ValueCell*>& visiting);

std::optional<Value> eval_cells(const AExpr& e,
                                const std::map<Reg, ValuePtr>& env,
                                std::set<const ValueCell*>& visiting) {
  switch (e.op) {
    case AExpr::Op::Lit:
      return e.lit;
    case AExpr::Op::Reg: {
      auto it = env.find(e.name);
      assert(it != env.end() && "capture must cover every source register");
      if (it == env.end()) return 0;
      return resolve_impl(it->second, visiting);
    }
    case AExpr::Op::Shared:
      assert(false && "shared leaves never occur in program expressions");
      return std::nullopt;
    default: {
      auto l = eval_cells(*e.lhs, env, visiting);
      auto r = eval_cells(*e.rhs, env, visiting);
      if (!l || !r) return std::nullopt;
      switch (e.op) {
        case AExpr::Op::Add:
          return *l + *r;
        case AExpr::Op::Sub:
          return *l - *r;
        default:
          return *l * *r;
      }
    }
  }
}

std::optional<bool> eval_cells_bool(const BExpr& e,
                                    const std::map<Reg, ValuePtr>& env,
                                    std::set<const ValueCell*>& visiting) {
  switch (e.op) {
    case BExpr::Op::Lit:
      return e.lit;
    case BExpr::Op::Not: {
      auto v = eval_cells_bool(*e.arg0, env, visiting);
      if (!v) return std::nullopt;
      return !*v;
    }
    case BExpr::Op::And:
    case BExpr::Op::Or: {
      auto l = eval_cells_bool(*e.arg0, env, visiting);
      auto r = eval_cells_bool(*e.arg1, env, visiting);
      if (!l || !r) return std::nullopt;
      return e.op == BExpr::Op::And ? (*l && *r) : (*l || *r);
    }
    default: {
      auto l = eval_cells(*e.cmp0, env, visiting);
      auto r = eval_cells(*e.cmp1, env, visiting);
      if (!l || !r) return std::nullopt;
      switch (e.op) {
        case BExpr::Op::Eq:
          return *l == *r;
        case BExpr::Op::Ne:
          return *l != *r;
        case BExpr::Op::Lt:
          return *l < *r;
        case BExpr::Op::Le:
          return *l <= *r;
        case BExpr::Op::Gt:
          return *l > *r;
        default:
          return *l >= *r;
      }
    }
  }
}

std::optional<Value> resolve_impl(const ValuePtr& cell,
                                  std::set<const ValueCell*>& visiting) {
  assert(cell);
  if (cell->concrete) return cell->concrete;
  if (!cell->filled()) return std::nullopt;  // producer not completed yet
  if (visiting.count(cell.get())) throw ValueCycleError();
  visiting.insert(cell.get());
  std::optional<Value> v;
  if (cell->alias)
    v = resolve_impl(cell->alias, visiting);
  else
    v = eval_cells(*cell->expr, cell->env, visiting);
  visiting.erase(cell.get());
  if (v) {
    cell->concrete = v;
    cell->alias.reset();
    cell->expr.reset();
    cell->env.clear();
  }
  return v;
}

ValuePtr concrete_cell(Value v) {
  auto c = std::make_shared<ValueCell>();
  c->concrete = v;
  return c;
}

}  // namespace

std::optional<Value> resolve(const ValuePtr& cell) {
  std::set<const ValueCell*> visiting;
  return resolve_impl(cell, visiting);
}

MachineState MachineState::initial(const Litmus& l) {
  MachineState st;
  for (const auto& [v, val] : l.init) st.mem[v] = concrete_cell(val);
  st.regs.resize(l.procs.size());
  st.buffers.resize(l.procs.size());
  return st;
}

namespace {

// The current version cell of a register; untouched registers read 0.
ValuePtr reg_cell(MachineState& st, ProcId pid, const Reg& r) {
  auto& m = st.regs[static_cast<std::size_t>(pid)];
  auto it = m.find(r);
  if (it != m.end()) return it->second;
  ValuePtr c = concrete_cell(0);
  m.emplace(r, c);
  return c;
}

ValuePtr mem_cell(MachineState& st, const Var& v) {
  auto it = st.mem.find(v);
  if (it != st.mem.end()) return it->second;
  ValuePtr c = concrete_cell(0);
  st.mem.emplace(v, c);
  return c;
}

std::map<Reg, ValuePtr> capture_env(MachineState& st, ProcId pid,
                                    const std::set<Reg>& regs) {
  std::map<Reg, ValuePtr> env;
  for (const Reg& r : regs) env.emplace(r, reg_cell(st, pid, r));
  return env;
}

// Either a concrete cell (all inputs resolved) or a suspended expression
// over the captured register versions.
ValuePtr make_value(const AExprPtr& expr, std::map<Reg, ValuePtr> env) {
  std::set<const ValueCell*> visiting;
  auto v = eval_cells(*expr, env, visiting);
  if (v) return concrete_cell(*v);
  auto c = std::make_shared<ValueCell>();
  c->expr = expr;
  c->env = std::move(env);
  return c;
}

void fill_from(const ValuePtr& dst, const ValuePtr& src) {
  assert(!dst->filled());
  auto v = resolve(src);
  if (v)
    dst->concrete = v;
  else
    dst->alias = src;
}

// The newest buffered store to this location that is older than the load.
const BufferEntry* forward_source(const MachineState& st, ProcId pid,
                                  const Var& v, EventId load_eid) {
  for (const auto& entry : st.buffers[static_cast<std::size_t>(pid)])
    if (entry.var == v && entry.eid < load_eid) return &entry;
  return nullptr;
}

// Effects of an action at its completion event. `dst_cell` is the
// pre-allocated destination version for two-stage loads and register ops;
// null when completing at the main event. `env` is the register capture
// from the main event (two-stage) or taken now (single-stage).
// Returns false when an assertion failed.
bool complete_action(MachineState& st, ProcId pid, EventId eid,
                     const Action& act, const ValuePtr& dst_cell,
                     std::map<Reg, ValuePtr> env) {
  switch (act.type) {
    case Action::Type::Load: {
      ValuePtr dst = dst_cell ? dst_cell : std::make_shared<ValueCell>();
      if (const BufferEntry* entry = forward_source(st, pid, act.var, eid))
        fill_from(dst, entry->val);
      else
        fill_from(dst, mem_cell(st, act.var));
      if (!dst_cell) st.regs[static_cast<std::size_t>(pid)][act.dst] = dst;
      return true;
    }
    case Action::Type::RegOp: {
      ValuePtr v = make_value(act.expr, std::move(env));
      if (dst_cell) {
        fill_from(dst_cell, v);
      } else {
        st.regs[static_cast<std::size_t>(pid)][act.dst] = v;
      }
      return true;
    }
    case Action::Type::Assert: {
      std::set<const ValueCell*> visiting;
      auto v = eval_cells_bool(*act.cond, env, visiting);
      if (!v) {
        // Inputs not concrete yet; re-checked at the end of the replay.
        st.deferred_asserts.emplace_back(act.cond, std::move(env));
        return true;
      }
      return *v;
    }
    case Action::Type::Fence:
      return true;
    case Action::Type::Store:
      assert(false && "stores complete via the buffer path");
      return true;
  }
  return true;
}

}  // namespace

std::optional<MachineState> apply_event(const Architecture& arch,
                                        MachineState st, const Event& e) {
  const auto pid = e.pid;
  const auto p = static_cast<std::size_t>(pid);
  assert(p < st.regs.size());
  const Action& act = e.act;

  if (e.kind == Kind::Main) {
    if (!arch.shadows(act)) {
      // Single-stage: the main event is the completion event.
      if (act.type == Action::Type::Store) {
        st.mem[act.var] = make_value(act.expr, capture_env(st, pid, reg_use(act).reads));
        return st;
      }
      auto env = capture_env(st, pid, reg_use(act).reads);
      if (!complete_action(st, pid, e.eid, act, nullptr, std::move(env)))
        return std::nullopt;
      return st;
    }
    // Two-stage initiation.
    switch (act.type) {
      case Action::Type::Store: {
        // Evaluate eagerly while the source registers are stable; defer to
        // the captured versions otherwise.
        BufferEntry entry{e.eid, act.var,
                          make_value(act.expr, capture_env(st, pid, reg_use(act).reads))};
        st.buffers[p].push_front(std::move(entry));
        break;
      }
      case Action::Type::Load:
      case Action::Type::RegOp: {
        MachineState::PendingOp op;
        op.act = act;
        op.dst_cell = std::make_shared<ValueCell>();
        if (act.type == Action::Type::RegOp)
          op.env = capture_env(st, pid, reg_use(act).reads);
        // Install the new register version now so later captures of this
        // processor see it, even before the value is known.
        st.regs[p][act.dst] = op.dst_cell;
        st.pending[{pid, e.eid}] = std::move(op);
        break;
      }
      case Action::Type::Assert: {
        MachineState::PendingOp op;
        op.act = act;
        op.env = capture_env(st, pid, reg_use(act).reads);
        st.pending[{pid, e.eid}] = std::move(op);
        break;
      }
      case Action::Type::Fence:
        break;
    }
    return st;
  }

  // Shadow: completion of a two-stage action.
  if (act.type == Action::Type::Store) {
    auto& buf = st.buffers[p];
    auto it = std::find_if(buf.begin(), buf.end(), [&](const BufferEntry& be) {
      return be.eid == e.eid;
    });
    assert(it != buf.end() && "shadow store without a buffered entry");
    ValuePtr val = it->val;
    buf.erase(it);
    resolve(val);  // usually concrete by now; memoize if so
    st.mem[act.var] = val;
    return st;
  }
  if (act.type == Action::Type::Fence) return st;

  auto pit = st.pending.find({pid, e.eid});
  assert(pit != st.pending.end() && "shadow event without a pending main");
  MachineState::PendingOp op = std::move(pit->second);
  st.pending.erase(pit);
  if (!complete_action(st, pid, e.eid, act, op.dst_cell, std::move(op.env)))
    return std::nullopt;
  return st;
}

std::optional<MachineState> run_execution(const Litmus& l,
                                          const Architecture& arch,
                                          const Execution& es) {
  MachineState st = MachineState::initial(l);
  for (const Event& e : es) {
    auto next = apply_event(arch, std::move(st), e);
    if (!next) return std::nullopt;
    st = *std::move(next);
  }
  for (const auto& buf : st.buffers)
    assert(buf.empty() && "complete execution left a buffered store");
  assert(st.pending.empty() && "complete execution left a pending action");
  // Asserts whose inputs were still in flight at their completion event:
  // everything is resolvable now.
  for (const auto& [cond, env] : st.deferred_asserts) {
    std::set<const ValueCell*> visiting;
    auto v = eval_cells_bool(*cond, env, visiting);
    if (!v)
      throw std::logic_error("deferred assert unresolvable after completion");
    if (!*v) return std::nullopt;
  }
  st.deferred_asserts.clear();
  return st;
}

bool Observation::operator<(const Observation& o) const {
  if (mem != o.mem) return mem < o.mem;
  return regs < o.regs;
}

bool Observation::operator==(const Observation& o) const {
  return mem == o.mem && regs == o.regs;
}

namespace {

void collect_program_names(const Program& p, std::set<Reg>& regs,
                           std::set<Var>& vars) {
  for (const Cmd& c : p) {
    switch (c.type) {
      case Cmd::Type::Act: {
        RegUse u = reg_use(c.act);
        regs.insert(u.reads.begin(), u.reads.end());
        regs.insert(u.writes.begin(), u.writes.end());
        if (auto v = shared_var(c.act)) vars.insert(*v);
        break;
      }
      case Cmd::Type::If:
      case Cmd::Type::While: {
        RegUse u = reg_use(Action::assertion(c.cond));
        regs.insert(u.reads.begin(), u.reads.end());
        collect_program_names(c.body0, regs, vars);
        collect_program_names(c.body1, regs, vars);
        break;
      }
      case Cmd::Type::Choice:
        collect_program_names(c.body0, regs, vars);
        collect_program_names(c.body1, regs, vars);
        break;
    }
  }
}

void collect_cond_names(const AExpr& e, std::set<std::string>& qregs,
                        std::set<Var>& vars) {
  switch (e.op) {
    case AExpr::Op::Reg:
      qregs.insert(e.name);
      break;
    case AExpr::Op::Shared:
      vars.insert(e.name);
      break;
    case AExpr::Op::Add:
    case AExpr::Op::Sub:
    case AExpr::Op::Mul:
      collect_cond_names(*e.lhs, qregs, vars);
      collect_cond_names(*e.rhs, qregs, vars);
      break;
    default:
      break;
  }
}

void collect_cond_names(const BExpr& e, std::set<std::string>& qregs,
                        std::set<Var>& vars) {
  switch (e.op) {
    case BExpr::Op::Lit:
      break;
    case BExpr::Op::Not:
      collect_cond_names(*e.arg0, qregs, vars);
      break;
    case BExpr::Op::And:
    case BExpr::Op::Or:
      collect_cond_names(*e.arg0, qregs, vars);
      collect_cond_names(*e.arg1, qregs, vars);
      break;
    default:
      collect_cond_names(*e.cmp0, qregs, vars);
      collect_cond_names(*e.cmp1, qregs, vars);
      break;
  }
}

struct Domain {
  std::set<Var> vars;
  std::vector<std::set<Reg>> proc_regs;          // per pid
  std::set<std::string> extra_qualified_regs;    // from the condition
};

Domain domain_of(const Litmus& l) {
  Domain d;
  for (const auto& [v, _] : l.init) d.vars.insert(v);
  d.proc_regs.resize(l.procs.size());
  for (std::size_t i = 0; i < l.procs.size(); ++i)
    collect_program_names(l.procs[i].second, d.proc_regs[i], d.vars);
  std::set<std::string> qregs;
  collect_cond_names(*l.cond, qregs, d.vars);
  d.extra_qualified_regs = std::move(qregs);
  return d;
}

}  // namespace

Observation observe(const Litmus& l, const MachineState& st) {
  Domain d = domain_of(l);
  Observation obs;
  auto resolved = [&](const ValuePtr& c) {
    auto v = resolve(c);
    if (!v) throw std::logic_error("observation of an unresolved value");
    return *v;
  };
  for (const Var& v : d.vars) {
    auto it = st.mem.find(v);
    obs.mem[v] = it == st.mem.end() ? 0 : resolved(it->second);
  }
  auto reg_value = [&](std::size_t pid, const Reg& r) {
    const auto& m = st.regs[pid];
    auto it = m.find(r);
    return it == m.end() ? Value{0} : resolved(it->second);
  };
  for (std::size_t pid = 0; pid < l.procs.size(); ++pid)
    for (const Reg& r : d.proc_regs[pid])
      obs.regs[l.procs[pid].first + ":" + r] = reg_value(pid, r);
  for (const std::string& qr : d.extra_qualified_regs) {
    if (obs.regs.count(qr)) continue;
    auto colon = qr.find(':');
    std::string proc = qr.substr(0, colon);
    Reg r = qr.substr(colon + 1);
    for (std::size_t pid = 0; pid < l.procs.size(); ++pid)
      if (l.procs[pid].first == proc) obs.regs[qr] = reg_value(pid, r);
  }
  return obs;
}

bool condition_holds(const Litmus& l, const Observation& obs) {
  Env env;
  env.regs = &obs.regs;
  env.vars = &obs.mem;
  return eval_bool(env, *l.cond);
}

std::set<Observation> ReachResult::states() const {
  std::set<Observation> s;
  for (const auto& [obs, _] : reached) s.insert(obs);
  return s;
}

ReachResult reachable(const Litmus& l, const Architecture& arch,
                      int unroll_bound, std::size_t max_execs) {
  std::vector<Program> expanded;
  for (const auto& [_, prog] : l.procs)
    expanded.push_back(expand(prog, unroll_bound));
  SysConfig c0 = SysConfig::initial(std::move(expanded));

  ReachResult r;
  std::set<Observation> seen;
  GenStats stats =
      for_each_normal_execution(arch, c0, [&](const Execution& es) {
        if (r.normal_executions >= max_execs)
          throw ExecutionLimitError(max_execs);
        ++r.normal_executions;
        auto final_state = run_execution(l, arch, es);
        if (!final_state) {
          ++r.invalid_executions;
          return true;
        }
        Observation obs = observe(l, *final_state);
        if (seen.insert(obs).second) r.reached.emplace_back(obs, es);
        return true;
      });
  r.stuck_paths = stats.stuck_paths;
  return r;
}

Verdict check_condition(const Litmus& l, const ReachResult& r) {
  Verdict v;
  for (const auto& [obs, es] : r.reached) {
    if (condition_holds(l, obs)) {
      v.holds = true;
      v.witness = es;
      return v;
    }
  }
  return v;
}

}  // namespace fnf
