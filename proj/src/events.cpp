#include "fnf/events.hpp"

#include <sstream>

namespace fnf {

bool equal(const Event& a, const Event& b) {
  return a.pid == b.pid && a.eid == b.eid && a.kind == b.kind &&
         equal(a.act, b.act);
}

std::string to_string(const Event& e) {
  std::ostringstream os;
  os << "(" << e.pid << "," << e.eid << ","
     << (e.kind == Kind::Main ? "o" : "*") << "," << to_string(e.act) << ")";
  return os.str();
}

Classified classify(const Event& e) {
  Classified c;
  c.is_main = e.kind == Kind::Main;
  c.is_shadow = e.kind == Kind::Shadow;
  c.is_write = e.act.type == Action::Type::Store;
  c.is_read = e.act.type == Action::Type::Load;
  c.is_fence = e.act.type == Action::Type::Fence;
  c.is_assert = e.act.type == Action::Type::Assert;
  return c;
}

std::optional<Var> shared_var(const Action& a) {
  switch (a.type) {
    case Action::Type::Load:
    case Action::Type::Store:
      return a.var;
    default:
      return std::nullopt;
  }
}

namespace {

void collect_regs(const AExpr& e, std::set<Reg>& out) {
  switch (e.op) {
    case AExpr::Op::Reg:
      out.insert(e.name);
      break;
    case AExpr::Op::Add:
    case AExpr::Op::Sub:
    case AExpr::Op::Mul:
      collect_regs(*e.lhs, out);
      collect_regs(*e.rhs, out);
      break;
    default:
      break;
  }
}

void collect_regs(const BExpr& e, std::set<Reg>& out) {
  switch (e.op) {
    case BExpr::Op::Lit:
      break;
    case BExpr::Op::Not:
      collect_regs(*e.arg0, out);
      break;
    case BExpr::Op::And:
    case BExpr::Op::Or:
      collect_regs(*e.arg0, out);
      collect_regs(*e.arg1, out);
      break;
    default:
      collect_regs(*e.cmp0, out);
      collect_regs(*e.cmp1, out);
      break;
  }
}

}  // namespace

RegUse reg_use(const Action& a) {
  RegUse u;
  switch (a.type) {
    case Action::Type::RegOp:
      collect_regs(*a.expr, u.reads);
      u.writes.insert(a.dst);
      break;
    case Action::Type::Load:
      u.writes.insert(a.dst);
      break;
    case Action::Type::Store:
      collect_regs(*a.expr, u.reads);
      break;
    case Action::Type::Assert:
      collect_regs(*a.cond, u.reads);
      break;
    case Action::Type::Fence:
      break;
  }
  return u;
}

std::string to_string(const Execution& es) {
  std::string s;
  for (const auto& e : es) {
    if (!s.empty()) s += " ";
    s += to_string(e);
  }
  return s;
}

}  // namespace fnf
