#include "fnf/arch.hpp"

#include <cassert>

namespace fnf {

std::optional<Architecture> Architecture::by_name(const std::string& name) {
  if (name == "sc") return sc();
  if (name == "tso") return tso();
  if (name == "pso") return pso();
  if (name == "rmo") return rmo();
  return std::nullopt;
}

std::string Architecture::name() const {
  switch (model_) {
    case Model::SC:
      return "sc";
    case Model::TSO:
      return "tso";
    case Model::PSO:
      return "pso";
    case Model::RMO:
      return "rmo";
  }
  return "?";
}

bool Architecture::shadows(const Action& a) const {
  switch (model_) {
    case Model::SC:
      return false;
    case Model::TSO:
    case Model::PSO:
      // Writes buffer; fences also need a completion event to sit in the
      // backlog and hold orderings.
      return a.type == Action::Type::Store || a.type == Action::Type::Fence;
    case Model::RMO:
      return true;
  }
  return false;
}

namespace {

bool same_shared_var(const Event& a, const Event& b) {
  auto va = shared_var(a), vb = shared_var(b);
  return va && vb && *va == *vb;
}

bool matches_class(const Event& e, MemClass c) {
  return c == MemClass::Store ? is_write(e) : is_read(e);
}

// Orderings contributed by shadow fence events: a shadow fence(X, Y) is
// dependent with all older shadow events of class X and with all newer
// events (main or shadow) of class Y.
bool fence_same_dep(const Event& a, const Event& b) {
  if (is_fence(b) && is_shadow(b) && is_shadow(a) && a.eid < b.eid &&
      matches_class(a, b.act.fence_from))
    return true;
  if (is_fence(a) && is_shadow(a) && a.eid < b.eid &&
      matches_class(b, a.act.fence_to))
    return true;
  return false;
}

// The three clauses shared by TSO/PSO/RMO: mains in program order, a main
// before its own shadow, plus a model-specific shadow-shadow clause.
template <typename ShadowShadow>
bool same_dep_two_stage(const Event& a, const Event& b, ShadowShadow ss) {
  if (is_main(a) && is_main(b) && a.eid < b.eid) return true;
  if (is_main(a) && is_shadow(b) && a.eid == b.eid) return true;
  if (is_shadow(a) && is_shadow(b) && a.eid < b.eid && ss(a, b)) return true;
  return fence_same_dep(a, b);
}

}  // namespace

bool data_dep(const Event& a, const Event& b) {
  const RegUse ua = reg_use(a.act);
  const RegUse ub = reg_use(b.act);
  for (const Reg& r : ub.reads)
    if (ua.writes.count(r)) return true;
  return false;
}

bool control_dep(const Event& a, const Event& b) {
  return is_assert(a) && is_write(b);
}

bool Architecture::same_dep(const Event& a, const Event& b) const {
  assert(a.pid == b.pid);
  switch (model_) {
    case Model::SC:
      return a.eid < b.eid;
    case Model::TSO:
      return same_dep_two_stage(a, b, [](const Event&, const Event&) {
        return true;
      });
    case Model::PSO:
      return same_dep_two_stage(a, b, [](const Event& x, const Event& y) {
        return same_shared_var(x, y);
      });
    case Model::RMO:
      return same_dep_two_stage(a, b, [](const Event& x, const Event& y) {
        return (same_shared_var(x, y) && (is_write(x) || is_read(x)) &&
                is_write(y)) ||
               data_dep(x, y) || control_dep(x, y);
      });
  }
  return false;
}

bool same_indep(const Architecture& arch, const Event& a, const Event& b) {
  return !arch.same_dep(a, b) && !arch.same_dep(b, a);
}

bool crxw(const Event& a, const Event& b) {
  return same_shared_var(a, b) && (is_write(a) || is_write(b));
}

namespace {

bool pending_store_to(const Backlog& bklg, const Var& v) {
  for (const Event& e : bklg)
    if (is_write(e) && e.act.var == v) return true;
  return false;
}

bool older_pending_store_to(const Backlog& bklg, const Var& v, EventId eid) {
  for (const Event& e : bklg)
    if (is_write(e) && e.act.var == v && e.eid < eid) return true;
  return false;
}

bool global_write(const Event& e) { return is_shadow(e) && is_write(e); }

}  // namespace

bool crxw_p(const Backlog& x, const Backlog& y, const Event& a, const Event& b) {
  if (!same_shared_var(a, b)) return false;
  auto global = [](const Event& e, const Backlog& own) {
    if (global_write(e)) return true;
    return is_read(e) && !pending_store_to(own, e.act.var);
  };
  if (!global(a, x) || !global(b, y)) return false;
  return global_write(a) || global_write(b);
}

bool crxw_pp(const Backlog& x, const Backlog& y, const Event& a, const Event& b) {
  if (!same_shared_var(a, b)) return false;
  auto global = [](const Event& e, const Backlog& own) {
    if (global_write(e)) return true;
    return is_shadow(e) && is_read(e) &&
           !older_pending_store_to(own, e.act.var, e.eid);
  };
  if (!global(a, x) || !global(b, y)) return false;
  return global_write(a) || global_write(b);
}

bool Architecture::diff_dep(const Backlog& x, const Backlog& y, const Event& a,
                            const Event& b) const {
  assert(a.pid != b.pid);
  // Cross-processor dependence is only ever through shared locations.
  if (!shared_var(a) || !shared_var(b)) return false;
  switch (model_) {
    case Model::SC:
      return crxw(a, b);
    case Model::TSO:
    case Model::PSO:
      return crxw_p(x, y, a, b);
    case Model::RMO:
      return crxw_pp(x, y, a, b);
  }
  return false;
}

bool Architecture::prec(const Event& a, const Event& b) const {
  if (model_ == Model::SC) return a.pid < b.pid;
  return a.pid < b.pid || (a.pid == b.pid && a.eid < b.eid);
}

}  // namespace fnf
