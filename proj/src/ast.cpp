#include "fnf/ast.hpp"

#include <sstream>

namespace fnf {

AExprPtr AExpr::lit_of(Value v) {
  auto e = std::make_shared<AExpr>();
  e->op = Op::Lit;
  e->lit = v;
  return e;
}

AExprPtr AExpr::reg_of(std::string r) {
  auto e = std::make_shared<AExpr>();
  e->op = Op::Reg;
  e->name = std::move(r);
  return e;
}

AExprPtr AExpr::shared_of(std::string v) {
  auto e = std::make_shared<AExpr>();
  e->op = Op::Shared;
  e->name = std::move(v);
  return e;
}

AExprPtr AExpr::bin(Op o, AExprPtr l, AExprPtr r) {
  auto e = std::make_shared<AExpr>();
  e->op = o;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

BExprPtr BExpr::lit_of(bool b) {
  auto e = std::make_shared<BExpr>();
  e->op = Op::Lit;
  e->lit = b;
  return e;
}

BExprPtr BExpr::negate(BExprPtr b) {
  auto e = std::make_shared<BExpr>();
  e->op = Op::Not;
  e->arg0 = std::move(b);
  return e;
}

BExprPtr BExpr::conj(BExprPtr l, BExprPtr r) {
  auto e = std::make_shared<BExpr>();
  e->op = Op::And;
  e->arg0 = std::move(l);
  e->arg1 = std::move(r);
  return e;
}

BExprPtr BExpr::disj(BExprPtr l, BExprPtr r) {
  auto e = std::make_shared<BExpr>();
  e->op = Op::Or;
  e->arg0 = std::move(l);
  e->arg1 = std::move(r);
  return e;
}

BExprPtr BExpr::cmp(Op o, AExprPtr l, AExprPtr r) {
  auto e = std::make_shared<BExpr>();
  e->op = o;
  e->cmp0 = std::move(l);
  e->cmp1 = std::move(r);
  return e;
}

bool equal(const AExpr& a, const AExpr& b) {
  if (a.op != b.op) return false;
  switch (a.op) {
    case AExpr::Op::Lit:
      return a.lit == b.lit;
    case AExpr::Op::Reg:
    case AExpr::Op::Shared:
      return a.name == b.name;
    default:
      return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
  }
}

bool equal(const BExpr& a, const BExpr& b) {
  if (a.op != b.op) return false;
  switch (a.op) {
    case BExpr::Op::Lit:
      return a.lit == b.lit;
    case BExpr::Op::Not:
      return equal(*a.arg0, *b.arg0);
    case BExpr::Op::And:
    case BExpr::Op::Or:
      return equal(*a.arg0, *b.arg0) && equal(*a.arg1, *b.arg1);
    default:
      return equal(*a.cmp0, *b.cmp0) && equal(*a.cmp1, *b.cmp1);
  }
}

std::string to_string(const AExpr& e) {
  switch (e.op) {
    case AExpr::Op::Lit:
      return std::to_string(e.lit);
    case AExpr::Op::Reg:
    case AExpr::Op::Shared:
      return e.name;
    case AExpr::Op::Add:
      return "(" + to_string(*e.lhs) + " + " + to_string(*e.rhs) + ")";
    case AExpr::Op::Sub:
      return "(" + to_string(*e.lhs) + " - " + to_string(*e.rhs) + ")";
    case AExpr::Op::Mul:
      return "(" + to_string(*e.lhs) + " * " + to_string(*e.rhs) + ")";
  }
  return "?";
}

std::string to_string(const BExpr& e) {
  auto cmp = [&](const char* op) {
    return "(" + to_string(*e.cmp0) + " " + op + " " + to_string(*e.cmp1) + ")";
  };
  switch (e.op) {
    case BExpr::Op::Lit:
      return e.lit ? "true" : "false";
    case BExpr::Op::Not:
      return "!" + to_string(*e.arg0);
    case BExpr::Op::And:
      return "(" + to_string(*e.arg0) + " && " + to_string(*e.arg1) + ")";
    case BExpr::Op::Or:
      return "(" + to_string(*e.arg0) + " || " + to_string(*e.arg1) + ")";
    case BExpr::Op::Eq:
      return cmp("==");
    case BExpr::Op::Ne:
      return cmp("!=");
    case BExpr::Op::Lt:
      return cmp("<");
    case BExpr::Op::Le:
      return cmp("<=");
    case BExpr::Op::Gt:
      return cmp(">");
    case BExpr::Op::Ge:
      return cmp(">=");
  }
  return "?";
}

std::string to_string(MemClass c) {
  return c == MemClass::Store ? "store" : "load";
}

Action Action::regop(Reg dst, AExprPtr expr) {
  Action a;
  a.type = Type::RegOp;
  a.dst = std::move(dst);
  a.expr = std::move(expr);
  return a;
}

Action Action::load(Reg dst, Var var) {
  Action a;
  a.type = Type::Load;
  a.dst = std::move(dst);
  a.var = std::move(var);
  return a;
}

Action Action::store(Var var, AExprPtr expr) {
  Action a;
  a.type = Type::Store;
  a.var = std::move(var);
  a.expr = std::move(expr);
  return a;
}

Action Action::assertion(BExprPtr cond) {
  Action a;
  a.type = Type::Assert;
  a.cond = std::move(cond);
  return a;
}

Action Action::fence(MemClass from, MemClass to) {
  Action a;
  a.type = Type::Fence;
  a.fence_from = from;
  a.fence_to = to;
  return a;
}

bool equal(const Action& a, const Action& b) {
  if (a.type != b.type) return false;
  switch (a.type) {
    case Action::Type::RegOp:
      return a.dst == b.dst && equal(*a.expr, *b.expr);
    case Action::Type::Load:
      return a.dst == b.dst && a.var == b.var;
    case Action::Type::Store:
      return a.var == b.var && equal(*a.expr, *b.expr);
    case Action::Type::Assert:
      return equal(*a.cond, *b.cond);
    case Action::Type::Fence:
      return a.fence_from == b.fence_from && a.fence_to == b.fence_to;
  }
  return false;
}

std::string to_string(const Action& a) {
  std::ostringstream os;
  switch (a.type) {
    case Action::Type::RegOp:
      os << a.dst << " := " << to_string(*a.expr);
      break;
    case Action::Type::Load:
      os << a.dst << " := [" << a.var << "]";
      break;
    case Action::Type::Store:
      os << "[" << a.var << "] := " << to_string(*a.expr);
      break;
    case Action::Type::Assert:
      os << "assert " << to_string(*a.cond);
      break;
    case Action::Type::Fence:
      os << "fence(" << to_string(a.fence_from) << ", " << to_string(a.fence_to)
         << ")";
      break;
  }
  return os.str();
}

}  // namespace fnf
