#ifndef FNF_GEN_HPP
#define FNF_GEN_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "fnf/arch.hpp"
#include "fnf/lang.hpp"
#include "fnf/trace.hpp"

namespace fnf {

/// Residual program, backlog and event counter of one processor.
struct LocalConfig {
  Program prog;
  Backlog bklg;
  EventId next_eid = 0;

  bool done() const { return prog.empty() && bklg.empty(); }
};

struct SysConfig {
  std::vector<LocalConfig> procs;

  bool complete() const;
  static SysConfig initial(std::vector<Program> expanded);
};

/// All enabled small steps of one processor, in deterministic order:
/// backlog flushes by ascending eid first, then instruction starts with
/// choice branches left to right.
std::vector<std::pair<Event, LocalConfig>> proc_steps(const Architecture& arch,
                                                      ProcId pid,
                                                      const LocalConfig& lc);

/// Processor steps lifted to the system, ordered by pid then proc order.
std::vector<std::pair<Event, SysConfig>> sys_steps(const Architecture& arch,
                                                   const SysConfig& c);

/// Lazy tree of executions. Children are computed on demand, never ahead of
/// a visit; a node's subtree is shared by every execution with that prefix.
class ExecTree {
 public:
  static ExecTree root(const Architecture& arch, SysConfig c0);

  /// The event labelling this node; nullopt at the root.
  const std::optional<Event>& event() const { return event_; }
  const SysConfig& config() const { return config_; }
  bool complete() const { return config_.complete(); }
  std::vector<ExecTree> children() const;

 private:
  ExecTree(const Architecture& arch, std::optional<Event> ev, SysConfig c);
  Architecture arch_;
  std::optional<Event> event_;
  SysConfig config_;
};

struct GenStats {
  std::size_t executions = 0;   // complete paths yielded
  std::size_t stuck_paths = 0;  // incomplete leaves reached
};

/// Visit every complete execution of the tree in DFS order. The callback
/// returns false to stop early.
using ExecutionVisitor = std::function<bool(const Execution&)>;

GenStats for_each_execution(const Architecture& arch, const SysConfig& c0,
                            const ExecutionVisitor& visit);

/// Fused generation and normality checking: walk the tree depth-first
/// carrying a CheckerState, and prune a child's entire subtree as soon as
/// its event is rejected -- before any of its own children are built. The
/// surviving complete paths are exactly the Foata-normal executions, one
/// per equivalence class, yielded in DFS order.
GenStats for_each_normal_execution(const Architecture& arch,
                                   const SysConfig& c0,
                                   const ExecutionVisitor& visit);

}  // namespace fnf

#endif
