#ifndef FNF_TRACE_HPP
#define FNF_TRACE_HPP

#include <optional>
#include <vector>

#include "fnf/arch.hpp"

namespace fnf {

/// Per-processor backlog state reached after a prefix of events. A pure
/// fold: main events of shadowed actions push the matching shadow event,
/// shadow events remove themselves, everything else is a no-op.
class Context {
 public:
  const Backlog& backlog(ProcId pid) const;
  void apply(const Architecture& arch, const Event& e);
  bool operator==(const Context& other) const;

 private:
  std::vector<Backlog> backlogs_;
  static const Backlog kEmpty;
};

/// Independence of two distinct events in a context. Same processor:
/// mutual same_dep-independence (context-free). Different processors:
/// diff_dep over the context's backlogs, symmetric by construction.
bool indep(const Architecture& arch, const Context& ctx, const Event& a,
           const Event& b);

/// Non-empty run of pairwise independent events, increasing under prec.
using Step = std::vector<Event>;

/// Incremental Foata-normality state. Scanning left to right, the checker
/// only ever needs the last two steps and the contexts at their openings:
///
///   prev_step at ctx_before_prev, curr_step at ctx_before_curr, ctx_now.
///
/// Extension of a normal prefix by event e succeeds in exactly one of two
/// ways: e joins curr_step (independent of all its members at
/// ctx_before_curr, dependent with some member of prev_step at
/// ctx_before_prev when prev_step exists, and last(curr_step) prec e), or e
/// opens a new step (dependent with some member of curr_step at
/// ctx_before_curr). Anything else rejects, and no extension of a rejected
/// prefix is normal.
struct CheckerState {
  Step prev_step, curr_step;
  Context ctx_before_prev, ctx_before_curr, ctx_now;
  std::size_t step_count = 0;
};

CheckerState checker_init();

/// One checker transition; nullopt means Reject.
std::optional<CheckerState> checker_extend(const Architecture& arch,
                                           const CheckerState& st,
                                           const Event& e);

bool is_foata_normal(const Architecture& arch, const Execution& es);

/// Split a normal execution into its steps. Precondition: is_foata_normal.
std::vector<Step> decompose(const Architecture& arch, const Execution& es);

}  // namespace fnf

#endif
