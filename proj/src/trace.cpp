#include "fnf/trace.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace fnf {

const Backlog Context::kEmpty = {};

const Backlog& Context::backlog(ProcId pid) const {
  if (pid < 0 || static_cast<std::size_t>(pid) >= backlogs_.size())
    return kEmpty;
  return backlogs_[static_cast<std::size_t>(pid)];
}

void Context::apply(const Architecture& arch, const Event& e) {
  auto p = static_cast<std::size_t>(e.pid);
  if (p >= backlogs_.size()) backlogs_.resize(p + 1);
  Backlog& b = backlogs_[p];
  if (e.kind == Kind::Main) {
    if (arch.shadows(e.act))
      b.insert(b.begin(), Event{e.pid, e.eid, Kind::Shadow, e.act});
    return;
  }
  // A shadow event removes its own pending entry.
  auto it = std::find_if(b.begin(), b.end(),
                         [&](const Event& x) { return x.eid == e.eid; });
  assert(it != b.end());
  if (it != b.end()) b.erase(it);
}

bool Context::operator==(const Context& other) const {
  // Trailing empty backlogs are irrelevant.
  std::size_t n = std::max(backlogs_.size(), other.backlogs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Backlog& x = backlog(static_cast<ProcId>(i));
    const Backlog& y = other.backlog(static_cast<ProcId>(i));
    if (x.size() != y.size()) return false;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!equal(x[j], y[j])) return false;
  }
  return true;
}

bool indep(const Architecture& arch, const Context& ctx, const Event& a,
           const Event& b) {
  if (a.pid == b.pid) return same_indep(arch, a, b);
  return !arch.diff_dep(ctx.backlog(a.pid), ctx.backlog(b.pid), a, b);
}

CheckerState checker_init() { return CheckerState{}; }

namespace {

bool step_indep(const Architecture& arch, const Context& ctx, const Step& s,
                const Event& e) {
  for (const Event& m : s)
    if (!indep(arch, ctx, m, e)) return false;
  return true;
}

}  // namespace

std::optional<CheckerState> checker_extend(const Architecture& arch,
                                           const CheckerState& st,
                                           const Event& e) {
  if (st.step_count == 0) {
    CheckerState n = st;
    n.curr_step = {e};
    n.ctx_now.apply(arch, e);
    n.step_count = 1;
    return n;
  }

  const bool curr_indep = step_indep(arch, st.ctx_before_curr, st.curr_step, e);

  // Join the current step: independent of all its members at the context
  // where the step opened, after its last member under prec, and (beyond
  // step one) dependent with the previous step at its own opening context.
  bool joinable = curr_indep && arch.prec(st.curr_step.back(), e);
  if (joinable && st.step_count >= 2)
    joinable = !step_indep(arch, st.ctx_before_prev, st.prev_step, e);
  if (joinable) {
    CheckerState n = st;
    n.curr_step.push_back(e);
    n.ctx_now.apply(arch, e);
    return n;
  }

  // Open a new step: some member of the current step is dependent with e.
  if (!curr_indep) {
    CheckerState n;
    n.prev_step = st.curr_step;
    n.curr_step = {e};
    n.ctx_before_prev = st.ctx_before_curr;
    n.ctx_before_curr = st.ctx_now;
    n.ctx_now = st.ctx_now;
    n.ctx_now.apply(arch, e);
    n.step_count = st.step_count + 1;
    return n;
  }

  return std::nullopt;
}

bool is_foata_normal(const Architecture& arch, const Execution& es) {
  CheckerState st = checker_init();
  for (const Event& e : es) {
    auto n = checker_extend(arch, st, e);
    if (!n) return false;
    st = *std::move(n);
  }
  return true;
}

std::vector<Step> decompose(const Architecture& arch, const Execution& es) {
  std::vector<Step> steps;
  CheckerState st = checker_init();
  for (const Event& e : es) {
    auto n = checker_extend(arch, st, e);
    if (!n) throw std::logic_error("decompose: execution is not normal");
    if (n->step_count > st.step_count)
      steps.push_back({e});
    else
      steps.back().push_back(e);
    st = *std::move(n);
  }
  return steps;
}

}  // namespace fnf
