#include "fnf/gen.hpp"

#include <cassert>

namespace fnf {

bool SysConfig::complete() const {
  for (const auto& lc : procs)
    if (!lc.done()) return false;
  return true;
}

SysConfig SysConfig::initial(std::vector<Program> expanded) {
  SysConfig c;
  for (auto& p : expanded) {
    LocalConfig lc;
    lc.prog = std::move(p);
    c.procs.push_back(std::move(lc));
  }
  return c;
}

namespace {

bool backlog_indep(const Architecture& arch, const Backlog& bklg,
                   const Event& e) {
  for (const Event& le : bklg)
    if (!same_indep(arch, le, e)) return false;
  return true;
}

// Instruction starts, walking choice commands left to right. The residual
// program of a branch is the branch body followed by the commands after
// the choice.
void start_steps(const Architecture& arch, ProcId pid, const Program& prog,
                 const Backlog& bklg, EventId eid,
                 std::vector<std::pair<Event, LocalConfig>>& out) {
  if (prog.empty()) return;
  const Cmd& head = prog.front();
  if (head.type == Cmd::Type::Act) {
    Event main{pid, eid, Kind::Main, head.act};
    if (!backlog_indep(arch, bklg, main)) return;
    LocalConfig next;
    next.prog.assign(prog.begin() + 1, prog.end());
    next.bklg = bklg;
    if (arch.shadows(head.act))
      next.bklg.insert(next.bklg.begin(),
                       Event{pid, eid, Kind::Shadow, head.act});
    next.next_eid = eid + 1;
    out.emplace_back(std::move(main), std::move(next));
    return;
  }
  assert(head.type == Cmd::Type::Choice && "program must be expanded");
  for (const Program* branch : {&head.body0, &head.body1}) {
    Program residual = *branch;
    residual.insert(residual.end(), prog.begin() + 1, prog.end());
    start_steps(arch, pid, residual, bklg, eid, out);
  }
}

}  // namespace

std::vector<std::pair<Event, LocalConfig>> proc_steps(const Architecture& arch,
                                                      ProcId pid,
                                                      const LocalConfig& lc) {
  std::vector<std::pair<Event, LocalConfig>> out;
  // Flushes first, by ascending eid: the backlog is newest-first, so walk
  // it back to front. An entry leaves only when it is independent of every
  // older entry.
  for (std::size_t i = lc.bklg.size(); i-- > 0;) {
    const Event& le = lc.bklg[i];
    bool enabled = true;
    for (std::size_t j = i + 1; j < lc.bklg.size(); ++j) {
      if (!same_indep(arch, lc.bklg[j], le)) {
        enabled = false;
        break;
      }
    }
    if (!enabled) continue;
    LocalConfig next = lc;
    next.bklg.erase(next.bklg.begin() + static_cast<std::ptrdiff_t>(i));
    out.emplace_back(le, std::move(next));
  }
  start_steps(arch, pid, lc.prog, lc.bklg, lc.next_eid, out);
  return out;
}

std::vector<std::pair<Event, SysConfig>> sys_steps(const Architecture& arch,
                                                   const SysConfig& c) {
  std::vector<std::pair<Event, SysConfig>> out;
  for (std::size_t pid = 0; pid < c.procs.size(); ++pid) {
    for (auto& [ev, lc] : proc_steps(arch, static_cast<ProcId>(pid),
                                     c.procs[pid])) {
      SysConfig next = c;
      next.procs[pid] = std::move(lc);
      out.emplace_back(ev, std::move(next));
    }
  }
  return out;
}

ExecTree::ExecTree(const Architecture& arch, std::optional<Event> ev,
                   SysConfig c)
    : arch_(arch), event_(std::move(ev)), config_(std::move(c)) {}

ExecTree ExecTree::root(const Architecture& arch, SysConfig c0) {
  return ExecTree(arch, std::nullopt, std::move(c0));
}

std::vector<ExecTree> ExecTree::children() const {
  std::vector<ExecTree> out;
  for (auto& [ev, cfg] : sys_steps(arch_, config_))
    out.push_back(ExecTree(arch_, ev, std::move(cfg)));
  return out;
}

namespace {

struct Walker {
  const Architecture& arch;
  const ExecutionVisitor& visit;
  bool prune;
  GenStats stats;
  Execution path;
  bool stopped = false;

  // Returns false once the visitor asked to stop.
  bool walk(const ExecTree& node, const CheckerState& st) {
    if (node.complete()) {
      ++stats.executions;
      return visit(path);
    }
    std::vector<ExecTree> kids = node.children();
    if (kids.empty()) {
      ++stats.stuck_paths;
      return true;
    }
    for (const ExecTree& kid : kids) {
      CheckerState next = st;
      if (prune) {
        auto accepted = checker_extend(arch, st, *kid.event());
        if (!accepted) continue;  // subtree never materialized
        next = *std::move(accepted);
      }
      path.push_back(*kid.event());
      bool keep_going = walk(kid, next);
      path.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }
};

GenStats drive(const Architecture& arch, const SysConfig& c0,
               const ExecutionVisitor& visit, bool prune) {
  Walker w{arch, visit, prune, {}, {}, false};
  w.walk(ExecTree::root(arch, c0), checker_init());
  return w.stats;
}

}  // namespace

GenStats for_each_execution(const Architecture& arch, const SysConfig& c0,
                            const ExecutionVisitor& visit) {
  return drive(arch, c0, visit, false);
}

GenStats for_each_normal_execution(const Architecture& arch,
                                   const SysConfig& c0,
                                   const ExecutionVisitor& visit) {
  return drive(arch, c0, visit, true);
}

}  // namespace fnf
