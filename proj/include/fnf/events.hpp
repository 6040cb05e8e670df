#ifndef FNF_EVENTS_HPP
#define FNF_EVENTS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fnf/ast.hpp"

namespace fnf {

using ProcId = int;   // 0-based processor index
using EventId = int;  // per-processor sequence number, from 0

enum class Kind { Main, Shadow };

/// One occurrence of an action phase. A two-stage action produces a Main
/// event (initiation) and a Shadow event (completion) with the same eid.
struct Event {
  ProcId pid;
  EventId eid;
  Kind kind;
  Action act;
};

bool equal(const Event& a, const Event& b);
std::string to_string(const Event& e);

struct Classified {
  bool is_main, is_shadow, is_write, is_read, is_fence, is_assert;
};

Classified classify(const Event& e);

inline bool is_main(const Event& e) { return e.kind == Kind::Main; }
inline bool is_shadow(const Event& e) { return e.kind == Kind::Shadow; }
inline bool is_write(const Event& e) { return e.act.type == Action::Type::Store; }
inline bool is_read(const Event& e) { return e.act.type == Action::Type::Load; }
inline bool is_fence(const Event& e) { return e.act.type == Action::Type::Fence; }
inline bool is_assert(const Event& e) { return e.act.type == Action::Type::Assert; }

/// The shared location an action touches, if any.
std::optional<Var> shared_var(const Action& a);

inline std::optional<Var> shared_var(const Event& e) { return shared_var(e.act); }

struct RegUse {
  std::set<Reg> reads, writes;
};

/// Registers an action reads and writes.
RegUse reg_use(const Action& a);

using Execution = std::vector<Event>;

std::string to_string(const Execution& es);

}  // namespace fnf

#endif
