#pragma once

#include <string>
#include <vector>

namespace tg::rtl {

struct Loc {
  int line = 0;
  int col = 0;
};

// Expressions are value-semantic trees. `text` carries the payload whose
// meaning depends on the kind: operator name for Unary/Binary, literal text
// for Number, identifier for Ident.
enum class ExprKind {
  Number,   // text = normalized literal ("8'h0f", "100")
  Ident,    // text = name
  Unary,    // text = op, children = {operand}
  Binary,   // text = op, children = {lhs, rhs}
  Ternary,  // children = {cond, then, else}
  Concat,   // children = parts in source order
  Repeat,   // children = {count, value}
  Select,   // children = {base ident, msb[, lsb]}; bit select has 2 children
};

struct Expr {
  ExprKind kind = ExprKind::Number;
  std::string text;
  std::vector<Expr> children;
  Loc loc;

  static Expr number(std::string literal, Loc loc = {}) {
    Expr e;
    e.kind = ExprKind::Number;
    e.text = std::move(literal);
    e.loc = loc;
    return e;
  }
  static Expr ident(std::string name, Loc loc = {}) {
    Expr e;
    e.kind = ExprKind::Ident;
    e.text = std::move(name);
    e.loc = loc;
    return e;
  }
  static Expr unary(std::string op, Expr operand, Loc loc = {}) {
    Expr e;
    e.kind = ExprKind::Unary;
    e.text = std::move(op);
    e.children.push_back(std::move(operand));
    e.loc = loc;
    return e;
  }
  static Expr binary(std::string op, Expr lhs, Expr rhs, Loc loc = {}) {
    Expr e;
    e.kind = ExprKind::Binary;
    e.text = std::move(op);
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    e.loc = loc;
    return e;
  }
  static Expr ternary(Expr cond, Expr then_v, Expr else_v, Loc loc = {}) {
    Expr e;
    e.kind = ExprKind::Ternary;
    e.children.push_back(std::move(cond));
    e.children.push_back(std::move(then_v));
    e.children.push_back(std::move(else_v));
    e.loc = loc;
    return e;
  }
};

enum class StmtKind { Block, If, Case, Assign };

struct CaseItem;

struct Stmt {
  StmtKind kind = StmtKind::Block;
  Loc loc;

  // Assign
  Expr lhs;
  Expr rhs;
  bool nonblocking = false;

  // If (cond) / Case (selector)
  Expr cond;
  std::vector<Stmt> then_stmts;
  std::vector<Stmt> else_stmts;
  std::vector<CaseItem> case_items;

  // Block
  std::vector<Stmt> stmts;
};

struct CaseItem {
  std::vector<Expr> labels;  // empty => default
  std::vector<Stmt> body;
  Loc loc;
};

enum class PortDir { Input, Output, Inout };

struct Range {
  bool present = false;
  Expr msb;
  Expr lsb;
};

struct Port {
  std::string name;
  PortDir dir = PortDir::Input;
  bool is_reg = false;
  Range range;
  Loc loc;
};

struct Net {
  std::string name;
  bool is_reg = false;
  Range range;
  Loc loc;
};

struct Param {
  std::string name;
  Expr value;
  bool local = false;
  Loc loc;
};

struct ContAssign {
  Expr lhs;
  Expr rhs;
  Loc loc;
};

enum class EdgeKind { Level, Pos, Neg };

struct SensItem {
  EdgeKind edge = EdgeKind::Level;
  std::string signal;
};

struct AlwaysBlock {
  bool star = false;  // @(*) / @*
  std::vector<SensItem> sensitivity;
  Stmt body;
  Loc loc;

  bool clocked() const {
    for (const auto& s : sensitivity)
      if (s.edge != EdgeKind::Level) return true;
    return false;
  }
};

struct Connection {
  std::string port;  // empty for positional
  bool has_expr = false;
  Expr expr;
  Loc loc;
};

struct Instance {
  std::string module_name;
  std::string instance_name;
  std::vector<Connection> param_overrides;
  std::vector<Connection> connections;
  Loc loc;
};

enum class ItemKind { Assign, Always, Instance };

struct Item {
  ItemKind kind = ItemKind::Assign;
  ContAssign assign;
  AlwaysBlock always;
  Instance instance;
  Loc loc;
};

struct Module {
  std::string name;
  std::vector<Port> ports;  // declaration order
  std::vector<Net> nets;    // wires and regs, ports included
  std::vector<Param> params;
  std::vector<Item> items;
  Loc loc;

  const Port* find_port(const std::string& n) const {
    for (const auto& p : ports)
      if (p.name == n) return &p;
    return nullptr;
  }
  const Net* find_net(const std::string& n) const {
    for (const auto& x : nets)
      if (x.name == n) return &x;
    return nullptr;
  }
  const Param* find_param(const std::string& n) const {
    for (const auto& p : params)
      if (p.name == n) return &p;
    return nullptr;
  }
};

struct Ast {
  std::vector<Module> modules;

  const Module* find_module(const std::string& name) const {
    for (const auto& m : modules)
      if (m.name == name) return &m;
    return nullptr;
  }
  Module* find_module(const std::string& name) {
    for (auto& m : modules)
      if (m.name == name) return &m;
    return nullptr;
  }
};

struct SourceFile {
  std::string path;
  std::string text;
};

struct SourceUnit {
  std::vector<SourceFile> files;
  std::string top_module;  // may be empty: inferred as the unique root module
};

// Single elaborated module: no Instance items, parameters folded to
// constants, instance-local names prefixed with the dot-joined instance path.
struct FlatDesign {
  std::string name;
  Module module;
};

}  // namespace tg::rtl
