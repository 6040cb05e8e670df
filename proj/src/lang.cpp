#include "fnf/lang.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace fnf {

Cmd Cmd::action(Action a) {
  Cmd c;
  c.type = Type::Act;
  c.act = std::move(a);
  return c;
}

Cmd Cmd::branch(BExprPtr cond, Program then_body, Program else_body) {
  Cmd c;
  c.type = Type::If;
  c.cond = std::move(cond);
  c.body0 = std::move(then_body);
  c.body1 = std::move(else_body);
  return c;
}

Cmd Cmd::loop(BExprPtr cond, Program body) {
  Cmd c;
  c.type = Type::While;
  c.cond = std::move(cond);
  c.body0 = std::move(body);
  return c;
}

Cmd Cmd::choice(Program left, Program right) {
  Cmd c;
  c.type = Type::Choice;
  c.body0 = std::move(left);
  c.body1 = std::move(right);
  return c;
}

bool equal(const Cmd& a, const Cmd& b) {
  if (a.type != b.type) return false;
  switch (a.type) {
    case Cmd::Type::Act:
      return equal(a.act, b.act);
    case Cmd::Type::If:
      return equal(*a.cond, *b.cond) && equal(a.body0, b.body0) &&
             equal(a.body1, b.body1);
    case Cmd::Type::While:
      return equal(*a.cond, *b.cond) && equal(a.body0, b.body0);
    case Cmd::Type::Choice:
      return equal(a.body0, b.body0) && equal(a.body1, b.body1);
  }
  return false;
}

bool equal(const Program& a, const Program& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!equal(a[i], b[i])) return false;
  return true;
}

ParseError::ParseError(std::string msg, int line_, int col_)
    : std::runtime_error(std::move(msg) + " at line " + std::to_string(line_) +
                         ", column " + std::to_string(col_)),
      line(line_),
      col(col_) {}

UnboundName::UnboundName(const std::string& what)
    : std::runtime_error("unbound name: " + what) {}

// ---------------------------------------------------------------------------
// Lexer

namespace {

struct Token {
  enum class Type { Ident, Int, String, Punct, End };
  Type type;
  std::string text;
  Value value = 0;
  int line = 1, col = 1;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  std::size_t pos = 0;
  int line = 1, col = 1;
  auto take = [&]() {
    char c = src[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  };
  for (;;) {
    // whitespace and // comments
    for (;;) {
      while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
        take();
      if (src.compare(pos, 2, "//") == 0) {
        while (pos < src.size() && src[pos] != '\n') take();
        continue;
      }
      break;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (pos >= src.size()) {
      t.type = Token::Type::End;
      t.text = "<eof>";
      out.push_back(t);
      return out;
    }
    char c = src[pos];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) ||
              src[pos] == '_'))
        id += take();
      t.type = Token::Type::Ident;
      t.text = id;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos < src.size() &&
             std::isdigit(static_cast<unsigned char>(src[pos])))
        num += take();
      t.type = Token::Type::Int;
      t.text = num;
      t.value = std::stoll(num);
    } else if (c == '"') {
      take();
      std::string s;
      while (pos < src.size() && src[pos] != '"') s += take();
      if (pos >= src.size()) throw ParseError("unterminated string", t.line, t.col);
      take();
      t.type = Token::Type::String;
      t.text = s;
    } else {
      static const char* two[] = {":=", "==", "!=", "<=", ">=", "&&", "||"};
      t.type = Token::Type::Punct;
      t.text = std::string(1, c);
      for (const char* op : two) {
        if (src.compare(pos, 2, op) == 0) {
          t.text = op;
          break;
        }
      }
      for (std::size_t i = 0; i < t.text.size(); ++i) take();
    }
    out.push_back(t);
  }
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  Parser(const std::string& src, std::string default_name)
      : toks_(tokenize(src)), default_name_(std::move(default_name)) {}

  Litmus parse() {
    Litmus l;
    l.name = default_name_;
    expect_kw("name");
    if (peek().type == Token::Type::String) l.name = next().text;
    parse_init(l);
    while (at_kw("proc")) parse_proc(l);
    if (l.procs.empty()) fail("expected at least one proc");
    expect_kw("exists");
    cond_procs_.clear();
    for (const auto& p : l.procs) cond_procs_.insert(p.first);
    in_cond_ = true;
    l.cond = parse_bexpr();
    in_cond_ = false;
    if (peek().type != Token::Type::End) fail("trailing input");
    return l;
  }

 private:
  void parse_init(Litmus& l) {
    expect_kw("init");
    expect_punct("{");
    while (!at_punct("}")) {
      Token v = expect_ident();
      expect_punct("=");
      Value val = parse_int();
      l.init[v.text] = val;
      expect_punct(";");
    }
    expect_punct("}");
  }

  Value parse_int() {
    bool negative = false;
    if (at_punct("-")) {
      next();
      negative = true;
    }
    if (peek().type != Token::Type::Int) fail("expected integer");
    Value v = next().value;
    return negative ? -v : v;
  }

  void parse_proc(Litmus& l) {
    expect_kw("proc");
    Token name = expect_ident();
    for (const auto& p : l.procs)
      if (p.first == name.text)
        throw ParseError("duplicate processor name '" + name.text + "'",
                         name.line, name.col);
    expect_punct("{");
    Program body = parse_stmts();
    expect_punct("}");
    l.procs.emplace_back(name.text, std::move(body));
  }

  Program parse_stmts() {
    Program p;
    while (!at_punct("}")) {
      if (peek().type == Token::Type::End) fail("expected '}'");
      parse_stmt(p);
    }
    return p;
  }

  void parse_stmt(Program& out) {
    if (at_kw("if")) {
      next();
      BExprPtr c = parse_bexpr();
      expect_punct("{");
      Program then_body = parse_stmts();
      expect_punct("}");
      Program else_body;
      if (at_kw("else")) {
        next();
        expect_punct("{");
        else_body = parse_stmts();
        expect_punct("}");
      }
      out.push_back(Cmd::branch(c, std::move(then_body), std::move(else_body)));
      return;
    }
    if (at_kw("while")) {
      next();
      BExprPtr c = parse_bexpr();
      expect_punct("{");
      Program body = parse_stmts();
      expect_punct("}");
      // An empty loop body cannot contribute events; drop the command.
      if (!body.empty()) out.push_back(Cmd::loop(c, std::move(body)));
      return;
    }
    if (at_kw("fence")) {
      next();
      expect_punct("(");
      MemClass from = parse_mem_class();
      expect_punct(",");
      MemClass to = parse_mem_class();
      expect_punct(")");
      expect_punct(";");
      out.push_back(Cmd::action(Action::fence(from, to)));
      return;
    }
    if (at_punct("[")) {
      next();
      Token var = expect_ident();
      expect_punct("]");
      expect_punct(":=");
      AExprPtr e = parse_aexpr();
      expect_punct(";");
      out.push_back(Cmd::action(Action::store(var.text, e)));
      return;
    }
    Token reg = expect_ident();
    expect_punct(":=");
    if (at_punct("[")) {
      next();
      Token var = expect_ident();
      expect_punct("]");
      expect_punct(";");
      out.push_back(Cmd::action(Action::load(reg.text, var.text)));
      return;
    }
    AExprPtr e = parse_aexpr();
    expect_punct(";");
    out.push_back(Cmd::action(Action::regop(reg.text, e)));
  }

  MemClass parse_mem_class() {
    Token t = expect_ident();
    if (t.text == "store") return MemClass::Store;
    if (t.text == "load") return MemClass::Load;
    throw ParseError("expected 'store' or 'load'", t.line, t.col);
  }

  // aexpr := term (('+'|'-') term)* ; term := factor ('*' factor)*
  AExprPtr parse_aexpr() {
    AExprPtr e = parse_term();
    while (at_punct("+") || at_punct("-")) {
      bool add = next().text == "+";
      AExprPtr r = parse_term();
      e = AExpr::bin(add ? AExpr::Op::Add : AExpr::Op::Sub, e, r);
    }
    return e;
  }

  AExprPtr parse_term() {
    AExprPtr e = parse_factor();
    while (at_punct("*")) {
      next();
      e = AExpr::bin(AExpr::Op::Mul, e, parse_factor());
    }
    return e;
  }

  AExprPtr parse_factor() {
    if (at_punct("(")) {
      next();
      AExprPtr e = parse_aexpr();
      expect_punct(")");
      return e;
    }
    if (at_punct("-")) {
      next();
      if (peek().type == Token::Type::Int) return AExpr::lit_of(-next().value);
      return AExpr::bin(AExpr::Op::Sub, AExpr::lit_of(0), parse_factor());
    }
    if (peek().type == Token::Type::Int) return AExpr::lit_of(next().value);
    Token id = expect_ident();
    if (in_cond_ && at_punct(":")) {
      // proc-qualified register in the exists-condition
      next();
      Token reg = expect_ident();
      if (!cond_procs_.count(id.text))
        throw ParseError("register qualified with unknown processor '" +
                             id.text + "'",
                         id.line, id.col);
      return AExpr::reg_of(id.text + ":" + reg.text);
    }
    if (in_cond_) return AExpr::shared_of(id.text);
    return AExpr::reg_of(id.text);
  }

  // bexpr := bterm ('||' bterm)* ; bterm := bfactor ('&&' bfactor)*
  BExprPtr parse_bexpr() {
    BExprPtr e = parse_bterm();
    while (at_punct("||")) {
      next();
      e = BExpr::disj(e, parse_bterm());
    }
    return e;
  }

  BExprPtr parse_bterm() {
    BExprPtr e = parse_bfactor();
    while (at_punct("&&")) {
      next();
      e = BExpr::conj(e, parse_bfactor());
    }
    return e;
  }

  BExprPtr parse_bfactor() {
    if (at_punct("!")) {
      next();
      return BExpr::negate(parse_bfactor());
    }
    if (at_kw("true") || at_kw("false"))
      return BExpr::lit_of(next().text == "true");
    if (at_punct("(")) {
      // "(" may open a nested bexpr or the left operand of a comparison;
      // try the bexpr reading first and backtrack on failure.
      std::size_t save = idx_;
      try {
        next();
        BExprPtr inner = parse_bexpr();
        expect_punct(")");
        return inner;
      } catch (const ParseError&) {
        idx_ = save;
      }
    }
    AExprPtr l = parse_aexpr();
    Token op = next();
    BExpr::Op bop;
    if (op.text == "==")
      bop = BExpr::Op::Eq;
    else if (op.text == "!=")
      bop = BExpr::Op::Ne;
    else if (op.text == "<")
      bop = BExpr::Op::Lt;
    else if (op.text == "<=")
      bop = BExpr::Op::Le;
    else if (op.text == ">")
      bop = BExpr::Op::Gt;
    else if (op.text == ">=")
      bop = BExpr::Op::Ge;
    else
      throw ParseError("expected comparison operator, got '" + op.text + "'",
                       op.line, op.col);
    AExprPtr r = parse_aexpr();
    return BExpr::cmp(bop, l, r);
  }

  const Token& peek() const { return toks_[idx_]; }
  Token next() {
    const Token& t = toks_[idx_];
    if (t.type != Token::Type::End) ++idx_;
    return t;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().col);
  }

  bool at_kw(const char* kw) const {
    return peek().type == Token::Type::Ident && peek().text == kw;
  }
  bool at_punct(const char* p) const {
    return peek().type == Token::Type::Punct && peek().text == p;
  }
  void expect_kw(const char* kw) {
    if (!at_kw(kw)) fail(std::string("expected '") + kw + "'");
    next();
  }
  void expect_punct(const char* p) {
    if (!at_punct(p)) fail(std::string("expected '") + p + "'");
    next();
  }
  Token expect_ident() {
    if (peek().type != Token::Type::Ident) fail("expected identifier");
    return next();
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
  std::string default_name_;
  std::set<std::string> cond_procs_;
  bool in_cond_ = false;
};

}  // namespace

Litmus parse_litmus(const std::string& text, const std::string& default_name) {
  return Parser(text, default_name).parse();
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string ind(int n) { return std::string(static_cast<std::size_t>(n), ' '); }

void print_cmd(std::ostringstream& os, const Cmd& c, int indent);

void print_block(std::ostringstream& os, const Program& p, int indent) {
  for (const auto& c : p) print_cmd(os, c, indent);
}

void print_cmd(std::ostringstream& os, const Cmd& c, int indent) {
  switch (c.type) {
    case Cmd::Type::Act:
      os << ind(indent) << to_string(c.act) << ";\n";
      break;
    case Cmd::Type::If:
      os << ind(indent) << "if " << to_string(*c.cond) << " {\n";
      print_block(os, c.body0, indent + 2);
      os << ind(indent) << "}";
      if (!c.body1.empty()) {
        os << " else {\n";
        print_block(os, c.body1, indent + 2);
        os << ind(indent) << "}";
      }
      os << "\n";
      break;
    case Cmd::Type::While:
      os << ind(indent) << "while " << to_string(*c.cond) << " {\n";
      print_block(os, c.body0, indent + 2);
      os << ind(indent) << "}\n";
      break;
    case Cmd::Type::Choice:
      os << ind(indent) << "choice {\n";
      print_block(os, c.body0, indent + 2);
      os << ind(indent) << "} or {\n";
      print_block(os, c.body1, indent + 2);
      os << ind(indent) << "}\n";
      break;
  }
}

}  // namespace

std::string print_program(const Program& p, int indent) {
  std::ostringstream os;
  print_block(os, p, indent);
  return os.str();
}

std::string print_litmus(const Litmus& l) {
  std::ostringstream os;
  os << "name \"" << l.name << "\"\n";
  os << "init {";
  for (const auto& [v, val] : l.init) os << " " << v << " = " << val << ";";
  os << " }\n";
  for (const auto& [name, prog] : l.procs) {
    os << "proc " << name << " {\n";
    os << print_program(prog, 2);
    os << "}\n";
  }
  os << "exists " << to_string(*l.cond) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Expansion

namespace {

Program expand_while(const BExprPtr& cond, const Program& body, int bound);

Program expand_rec(const Program& p, int bound) {
  Program out;
  for (const auto& c : p) {
    switch (c.type) {
      case Cmd::Type::Act:
        out.push_back(c);
        break;
      case Cmd::Type::If: {
        Program left, right;
        left.push_back(Cmd::action(Action::assertion(c.cond)));
        for (auto& cc : expand_rec(c.body0, bound)) left.push_back(std::move(cc));
        right.push_back(Cmd::action(Action::assertion(BExpr::negate(c.cond))));
        for (auto& cc : expand_rec(c.body1, bound)) right.push_back(std::move(cc));
        out.push_back(Cmd::choice(std::move(left), std::move(right)));
        break;
      }
      case Cmd::Type::While: {
        for (auto& cc : expand_while(c.cond, c.body0, bound))
          out.push_back(std::move(cc));
        break;
      }
      case Cmd::Type::Choice: {
        out.push_back(Cmd::choice(expand_rec(c.body0, bound),
                                  expand_rec(c.body1, bound)));
        break;
      }
    }
  }
  return out;
}

Program expand_while(const BExprPtr& cond, const Program& body, int bound) {
  Program out;
  if (bound <= 0) {
    // Iteration budget exhausted: only the exit branch remains.
    out.push_back(Cmd::action(Action::assertion(BExpr::negate(cond))));
    return out;
  }
  Program enter;
  enter.push_back(Cmd::action(Action::assertion(cond)));
  for (auto& cc : expand_rec(body, bound)) enter.push_back(std::move(cc));
  for (auto& cc : expand_while(cond, body, bound - 1))
    enter.push_back(std::move(cc));
  Program exit;
  exit.push_back(Cmd::action(Action::assertion(BExpr::negate(cond))));
  out.push_back(Cmd::choice(std::move(enter), std::move(exit)));
  return out;
}

}  // namespace

Program expand(const Program& p, int unroll_bound) {
  return expand_rec(p, unroll_bound);
}

bool is_expanded(const Program& p) {
  for (const auto& c : p) {
    switch (c.type) {
      case Cmd::Type::Act:
        break;
      case Cmd::Type::Choice:
        if (!is_expanded(c.body0) || !is_expanded(c.body1)) return false;
        break;
      default:
        return false;
    }
  }
  return true;
}

int max_path_actions(const Program& p) {
  int total = 0;
  for (const auto& c : p) {
    switch (c.type) {
      case Cmd::Type::Act:
        total += 1;
        break;
      case Cmd::Type::Choice:
      case Cmd::Type::If:
        total += std::max(max_path_actions(c.body0), max_path_actions(c.body1)) +
                 (c.type == Cmd::Type::If ? 1 : 0);
        break;
      case Cmd::Type::While:
        // Callers measure expanded programs; give a safe answer anyway.
        total += max_path_actions(c.body0) + 1;
        break;
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Evaluation

Value eval_arith(const Env& env, const AExpr& e) {
  switch (e.op) {
    case AExpr::Op::Lit:
      return e.lit;
    case AExpr::Op::Reg: {
      if (!env.regs || !env.regs->count(e.name)) throw UnboundName(e.name);
      return env.regs->at(e.name);
    }
    case AExpr::Op::Shared: {
      if (!env.vars || !env.vars->count(e.name)) throw UnboundName(e.name);
      return env.vars->at(e.name);
    }
    case AExpr::Op::Add:
      return eval_arith(env, *e.lhs) + eval_arith(env, *e.rhs);
    case AExpr::Op::Sub:
      return eval_arith(env, *e.lhs) - eval_arith(env, *e.rhs);
    case AExpr::Op::Mul:
      return eval_arith(env, *e.lhs) * eval_arith(env, *e.rhs);
  }
  throw UnboundName("bad expression");
}

bool eval_bool(const Env& env, const BExpr& e) {
  switch (e.op) {
    case BExpr::Op::Lit:
      return e.lit;
    case BExpr::Op::Not:
      return !eval_bool(env, *e.arg0);
    case BExpr::Op::And:
      return eval_bool(env, *e.arg0) && eval_bool(env, *e.arg1);
    case BExpr::Op::Or:
      return eval_bool(env, *e.arg0) || eval_bool(env, *e.arg1);
    case BExpr::Op::Eq:
      return eval_arith(env, *e.cmp0) == eval_arith(env, *e.cmp1);
    case BExpr::Op::Ne:
      return eval_arith(env, *e.cmp0) != eval_arith(env, *e.cmp1);
    case BExpr::Op::Lt:
      return eval_arith(env, *e.cmp0) < eval_arith(env, *e.cmp1);
    case BExpr::Op::Le:
      return eval_arith(env, *e.cmp0) <= eval_arith(env, *e.cmp1);
    case BExpr::Op::Gt:
      return eval_arith(env, *e.cmp0) > eval_arith(env, *e.cmp1);
    case BExpr::Op::Ge:
      return eval_arith(env, *e.cmp0) >= eval_arith(env, *e.cmp1);
  }
  throw UnboundName("bad expression");
}

Value eval_arith(const std::map<Reg, Value>& regs, const AExpr& e) {
  Env env;
  env.regs = &regs;
  return eval_arith(env, e);
}

bool eval_bool(const std::map<Reg, Value>& regs, const BExpr& e) {
  Env env;
  env.regs = &regs;
  return eval_bool(env, e);
}

}  // namespace fnf
