#ifndef FNF_EVAL_HPP
#define FNF_EVAL_HPP

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "fnf/arch.hpp"
#include "fnf/gen.hpp"
#include "fnf/lang.hpp"

namespace fnf {

/// A value produced by a replay. Usually concrete; under RMO the value of a
/// deferred store (or anything forwarded from one) may only become known
/// once the defining events have completed, so cells can hold a suspended
/// expression or an alias to another cell until then.
struct ValueCell;
using ValuePtr = std::shared_ptr<ValueCell>;

struct ValueCell {
  std::optional<Value> concrete;
  AExprPtr expr;                 // suspended: expr over env
  std::map<Reg, ValuePtr> env;
  ValuePtr alias;

  bool filled() const { return concrete || expr || alias; }
};

/// Raised when a replay's value graph is cyclic, i.e. the execution would
/// need a value out of thin air. Cannot happen for executions whose
/// register dataflow chains stay within three instructions per processor.
struct ValueCycleError : std::runtime_error {
  ValueCycleError();
};

/// Resolve a cell to a concrete value, memoizing. nullopt while some input
/// event has not completed yet.
std::optional<Value> resolve(const ValuePtr& cell);

/// A buffered store: evaluated eagerly at its main event when every source
/// register was stable, otherwise deferred (cell not yet concrete).
struct BufferEntry {
  EventId eid;
  Var var;
  ValuePtr val;
};

struct MachineState {
  std::map<Var, ValuePtr> mem;
  std::vector<std::map<Reg, ValuePtr>> regs;     // per pid
  std::vector<std::deque<BufferEntry>> buffers;  // newest first, stores only

  // Bookkeeping for two-stage actions between main and shadow event.
  struct PendingOp {
    Action act;
    ValuePtr dst_cell;             // Load/RegOp destination version
    std::map<Reg, ValuePtr> env;   // RegOp/Assert capture at the main event
  };
  std::map<std::pair<ProcId, EventId>, PendingOp> pending;

  // Asserts whose inputs were not yet concrete at completion; re-checked
  // once the whole execution has been applied.
  std::vector<std::pair<BExprPtr, std::map<Reg, ValuePtr>>> deferred_asserts;

  static MachineState initial(const Litmus& l);
};

/// Apply one event. Effects happen at the completion event (shadow when the
/// action is shadowed, else main). nullopt signals a failed assertion: the
/// execution is invalid for this initial state.
std::optional<MachineState> apply_event(const Architecture& arch,
                                        MachineState st, const Event& e);

/// Replay a complete execution from the litmus initial state. nullopt on a
/// failed assertion. On success all buffers are empty.
std::optional<MachineState> run_execution(const Litmus& l,
                                          const Architecture& arch,
                                          const Execution& es);

/// Final memory plus final registers, fully resolved; registers qualified
/// as "proc:reg". Domains are fixed per litmus so observations compare.
struct Observation {
  std::map<Var, Value> mem;
  std::map<std::string, Value> regs;

  bool operator<(const Observation& o) const;
  bool operator==(const Observation& o) const;
};

Observation observe(const Litmus& l, const MachineState& st);

bool condition_holds(const Litmus& l, const Observation& obs);

struct ReachResult {
  // Observations in first-reached (DFS) order, with one witness each.
  std::vector<std::pair<Observation, Execution>> reached;
  std::size_t normal_executions = 0;
  std::size_t stuck_paths = 0;
  std::size_t invalid_executions = 0;  // assertion-filtered

  std::set<Observation> states() const;
};

struct ExecutionLimitError : std::runtime_error {
  explicit ExecutionLimitError(std::size_t limit);
};

/// Enumerate normal executions, replay each, collect final observations.
ReachResult reachable(const Litmus& l, const Architecture& arch,
                      int unroll_bound, std::size_t max_execs = 1000000);

struct Verdict {
  bool holds = false;
  std::optional<Execution> witness;
};

/// Does some reachable observation satisfy the exists-condition? The
/// witness is the first normal execution reaching such an observation.
Verdict check_condition(const Litmus& l, const ReachResult& r);

}  // namespace fnf

#endif
