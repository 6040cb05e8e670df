#ifndef FNF_AST_HPP
#define FNF_AST_HPP

#include <cstdint>
#include <memory>
#include <string>

namespace fnf {

using Value = std::int64_t;
using Reg = std::string;   // processor-local register name
using Var = std::string;   // shared memory location name

/// Arithmetic expression over registers and literals. Immutable; shared
/// freely via AExprPtr.
struct AExpr;
using AExprPtr = std::shared_ptr<const AExpr>;

struct AExpr {
  enum class Op { Lit, Reg, Shared, Add, Sub, Mul };
  Op op;
  Value lit = 0;       // Lit
  std::string name;    // Reg / Shared
  AExprPtr lhs, rhs;   // binary ops

  static AExprPtr lit_of(Value v);
  static AExprPtr reg_of(std::string r);
  static AExprPtr shared_of(std::string v);  // only valid in exists-conditions
  static AExprPtr bin(Op o, AExprPtr l, AExprPtr r);
};

/// Boolean expression: constants, connectives, comparisons of AExprs.
struct BExpr;
using BExprPtr = std::shared_ptr<const BExpr>;

struct BExpr {
  enum class Op { Lit, Not, And, Or, Eq, Ne, Lt, Le, Gt, Ge };
  Op op;
  bool lit = false;
  BExprPtr arg0, arg1;  // Not / And / Or
  AExprPtr cmp0, cmp1;  // comparisons

  static BExprPtr lit_of(bool b);
  static BExprPtr negate(BExprPtr b);
  static BExprPtr conj(BExprPtr l, BExprPtr r);
  static BExprPtr disj(BExprPtr l, BExprPtr r);
  static BExprPtr cmp(Op o, AExprPtr l, AExprPtr r);
};

bool equal(const AExpr& a, const AExpr& b);
bool equal(const BExpr& a, const BExpr& b);
std::string to_string(const AExpr& e);
std::string to_string(const BExpr& e);

/// Fence parameters: which event class the ordering constraint applies to.
enum class MemClass { Store, Load };

std::string to_string(MemClass c);

/// One primitive instruction. Assert is produced by conditional expansion,
/// never by the parser.
struct Action {
  enum class Type { RegOp, Load, Store, Assert, Fence };
  Type type;
  Reg dst;                       // RegOp, Load
  Var var;                       // Load, Store
  AExprPtr expr;                 // RegOp, Store
  BExprPtr cond;                 // Assert
  MemClass fence_from = MemClass::Store;
  MemClass fence_to = MemClass::Store;

  static Action regop(Reg dst, AExprPtr expr);
  static Action load(Reg dst, Var var);
  static Action store(Var var, AExprPtr expr);
  static Action assertion(BExprPtr cond);
  static Action fence(MemClass from, MemClass to);
};

bool equal(const Action& a, const Action& b);
std::string to_string(const Action& a);

}  // namespace fnf

#endif
