#ifndef FNF_LANG_HPP
#define FNF_LANG_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fnf/ast.hpp"
#include "fnf/events.hpp"

namespace fnf {

/// A command: a primitive action, a structured control construct, or --
/// after expansion only -- a binary choice between two programs.
struct Cmd;
using Program = std::vector<Cmd>;

struct Cmd {
  enum class Type { Act, If, While, Choice };
  Type type;
  Action act;            // Act
  BExprPtr cond;         // If, While
  Program body0, body1;  // If: then/else; While: body0; Choice: branches

  static Cmd action(Action a);
  static Cmd branch(BExprPtr cond, Program then_body, Program else_body);
  static Cmd loop(BExprPtr cond, Program body);
  static Cmd choice(Program left, Program right);
};

bool equal(const Cmd& a, const Cmd& b);
bool equal(const Program& a, const Program& b);

struct Litmus {
  std::string name;
  std::map<Var, Value> init;
  std::vector<std::pair<std::string, Program>> procs;  // ProcId = index
  BExprPtr cond;  // exists-condition: registers qualified "proc:reg", vars bare
};

struct ParseError : std::runtime_error {
  ParseError(std::string msg, int line, int col);
  int line, col;
};

/// Parse a litmus test. Throws ParseError with position on bad input.
Litmus parse_litmus(const std::string& text, const std::string& default_name = "");

std::string print_program(const Program& p, int indent = 0);
std::string print_litmus(const Litmus& l);

/// Remove If/While by rewriting them into assert-guarded choices. While
/// loops unroll at most `unroll_bound` times; the residual iteration space
/// is cut off with the loop-exit assertion.
Program expand(const Program& p, int unroll_bound);

bool is_expanded(const Program& p);

/// Largest number of actions any single symbolic path through an expanded
/// program can issue.
int max_path_actions(const Program& p);

/// Evaluation environment. `vars` is only consulted for Shared leaves
/// (exists-conditions); program expressions never contain them.
struct Env {
  const std::map<Reg, Value>* regs = nullptr;
  const std::map<Var, Value>* vars = nullptr;
};

struct UnboundName : std::runtime_error {
  explicit UnboundName(const std::string& what);
};

Value eval_arith(const Env& env, const AExpr& e);
bool eval_bool(const Env& env, const BExpr& e);

Value eval_arith(const std::map<Reg, Value>& regs, const AExpr& e);
bool eval_bool(const std::map<Reg, Value>& regs, const BExpr& e);

}  // namespace fnf

#endif
