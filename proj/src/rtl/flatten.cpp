#include "rtl/flatten.hpp"

#include <map>
#include <set>
#include <vector>

#include "rtl/parser.hpp"
#include "support/error.hpp"

namespace tg::rtl {

namespace {

using ParamEnv = std::vector<std::pair<std::string, long long>>;

struct Inliner {
  const Ast& ast;
  Module out;
  std::vector<std::string> stack;  // active module names, for cycle reports

  explicit Inliner(const Ast& a) : ast(a) {}

  [[noreturn]] void cycle_error(const std::string& name) {
    std::string path;
    for (const auto& s : stack) path += s + " -> ";
    throw Error(ErrorKind::Elaboration,
                "recursive instantiation: " + path + name);
  }

  static std::string prefixed(const std::string& prefix,
                              const std::string& name) {
    return prefix.empty() ? name : prefix + "." + name;
  }

  // Rewrites an expression from module-local form to flat form: parameters
  // fold to decimal literals, identifiers gain the instance prefix.
  Expr rewrite_expr(const Expr& e, const Module& mod, const ParamEnv& env,
                    const std::string& prefix) {
    switch (e.kind) {
      case ExprKind::Number:
        return e;
      case ExprKind::Ident: {
        if (mod.find_param(e.text)) {
          long long v = eval_const(Expr::ident(e.text), env);
          return Expr::number(std::to_string(v), e.loc);
        }
        return Expr::ident(prefixed(prefix, e.text), e.loc);
      }
      default: {
        Expr copy = e;
        for (auto& c : copy.children) c = rewrite_expr(c, mod, env, prefix);
        // Constant-fold selects' index expressions where possible so ranges
        // like [WIDTH-1:0] survive as plain literals.
        if (copy.kind == ExprKind::Select) {
          for (size_t i = 1; i < copy.children.size(); ++i)
            try_fold(copy.children[i]);
        }
        if (copy.kind == ExprKind::Repeat) try_fold(copy.children[0]);
        return copy;
      }
    }
  }

  static void try_fold(Expr& e) {
    if (e.kind == ExprKind::Number || e.kind == ExprKind::Ident) return;
    try {
      long long v = eval_const(e, {});
      e = Expr::number(std::to_string(v), e.loc);
    } catch (const Error&) {
      // keep symbolic; builder treats it structurally
    }
  }

  Range rewrite_range(const Range& r, const Module& mod, const ParamEnv& env,
                      const std::string& prefix) {
    if (!r.present) return r;
    Range out;
    out.present = true;
    out.msb = rewrite_expr(r.msb, mod, env, prefix);
    out.lsb = rewrite_expr(r.lsb, mod, env, prefix);
    try_fold(out.msb);
    try_fold(out.lsb);
    return out;
  }

  Stmt rewrite_stmt(const Stmt& s, const Module& mod, const ParamEnv& env,
                    const std::string& prefix) {
    Stmt out;
    out.kind = s.kind;
    out.loc = s.loc;
    switch (s.kind) {
      case StmtKind::Assign:
        out.lhs = rewrite_expr(s.lhs, mod, env, prefix);
        out.rhs = rewrite_expr(s.rhs, mod, env, prefix);
        out.nonblocking = s.nonblocking;
        break;
      case StmtKind::If:
        out.cond = rewrite_expr(s.cond, mod, env, prefix);
        for (const auto& t : s.then_stmts)
          out.then_stmts.push_back(rewrite_stmt(t, mod, env, prefix));
        for (const auto& t : s.else_stmts)
          out.else_stmts.push_back(rewrite_stmt(t, mod, env, prefix));
        break;
      case StmtKind::Case:
        out.cond = rewrite_expr(s.cond, mod, env, prefix);
        for (const auto& item : s.case_items) {
          CaseItem ci;
          ci.loc = item.loc;
          for (const auto& l : item.labels)
            ci.labels.push_back(rewrite_expr(l, mod, env, prefix));
          for (const auto& b : item.body)
            ci.body.push_back(rewrite_stmt(b, mod, env, prefix));
          out.case_items.push_back(std::move(ci));
        }
        break;
      case StmtKind::Block:
        for (const auto& t : s.stmts)
          out.stmts.push_back(rewrite_stmt(t, mod, env, prefix));
        break;
    }
    return out;
  }

  // Computes the parameter environment of `mod` given overrides already
  // evaluated to constants.
  ParamEnv module_env(const Module& mod,
                      const std::map<std::string, long long>& overrides) {
    ParamEnv env;
    for (const auto& p : mod.params) {
      long long v;
      auto it = overrides.find(p.name);
      if (it != overrides.end() && !p.local) {
        v = it->second;
      } else {
        v = eval_const(p.value, env);
      }
      env.emplace_back(p.name, v);
    }
    return env;
  }

  void inline_module(const Module& mod,
                     const std::map<std::string, long long>& overrides,
                     const std::string& prefix) {
    for (const auto& s : stack)
      if (s == mod.name) cycle_error(mod.name);
    stack.push_back(mod.name);
    ParamEnv env = module_env(mod, overrides);

    for (const auto& n : mod.nets) {
      Net copy;
      copy.name = prefixed(prefix, n.name);
      copy.is_reg = n.is_reg;
      copy.range = rewrite_range(n.range, mod, env, prefix);
      copy.loc = n.loc;
      out.nets.push_back(std::move(copy));
    }

    for (const auto& item : mod.items) {
      switch (item.kind) {
        case ItemKind::Assign: {
          Item it;
          it.kind = ItemKind::Assign;
          it.loc = item.loc;
          it.assign.loc = item.assign.loc;
          it.assign.lhs = rewrite_expr(item.assign.lhs, mod, env, prefix);
          it.assign.rhs = rewrite_expr(item.assign.rhs, mod, env, prefix);
          out.items.push_back(std::move(it));
          break;
        }
        case ItemKind::Always: {
          Item it;
          it.kind = ItemKind::Always;
          it.loc = item.loc;
          it.always.star = item.always.star;
          it.always.loc = item.always.loc;
          for (const auto& s : item.always.sensitivity) {
            SensItem si;
            si.edge = s.edge;
            si.signal = prefixed(prefix, s.signal);
            it.always.sensitivity.push_back(std::move(si));
          }
          it.always.body = rewrite_stmt(item.always.body, mod, env, prefix);
          out.items.push_back(std::move(it));
          break;
        }
        case ItemKind::Instance:
          inline_instance(item.instance, mod, env, prefix);
          break;
      }
    }
    stack.pop_back();
  }

  void inline_instance(const Instance& inst, const Module& parent,
                       const ParamEnv& parent_env,
                       const std::string& parent_prefix) {
    const Module* child = ast.find_module(inst.module_name);
    if (!child)
      throw Error(ErrorKind::Elaboration,
                  "unknown module '" + inst.module_name + "'");
    std::string prefix = prefixed(parent_prefix, inst.instance_name);

    // Parameter overrides evaluate in the parent scope.
    std::map<std::string, long long> overrides;
    std::vector<const Param*> formal;
    for (const auto& p : child->params)
      if (!p.local) formal.push_back(&p);
    size_t positional = 0;
    for (const auto& ov : inst.param_overrides) {
      if (!ov.has_expr) continue;
      long long v = eval_const(ov.expr, parent_env);
      if (!ov.port.empty()) {
        bool known = false;
        for (const auto* f : formal) known = known || f->name == ov.port;
        if (!known)
          throw Error(ErrorKind::Elaboration,
                      "unresolved parameter '" + ov.port + "' on instance '" +
                          inst.instance_name + "'");
        overrides[ov.port] = v;
      } else {
        if (positional >= formal.size())
          throw Error(ErrorKind::Elaboration,
                      "too many parameter overrides on instance '" +
                          inst.instance_name + "'");
        overrides[formal[positional++]->name] = v;
      }
    }

    // Bind ports: inputs get "assign child_port = parent_expr", outputs the
    // reverse. Connection expressions are parent-scope.
    std::vector<std::pair<const Port*, const Connection*>> bindings;
    if (!inst.connections.empty() && inst.connections[0].port.empty()) {
      // positional
      if (inst.connections.size() > child->ports.size())
        throw Error(ErrorKind::Elaboration,
                    "too many connections on instance '" +
                        inst.instance_name + "'");
      for (size_t i = 0; i < inst.connections.size(); ++i)
        bindings.emplace_back(&child->ports[i], &inst.connections[i]);
    } else {
      for (const auto& c : inst.connections) {
        const Port* p = child->find_port(c.port);
        if (!p)
          throw Error(ErrorKind::Elaboration,
                      "module '" + child->name + "' has no port '" + c.port +
                          "' (instance '" + inst.instance_name + "')");
        bindings.emplace_back(p, &c);
      }
    }

    std::vector<Item> input_binds, output_binds;
    for (auto& [port, conn] : bindings) {
      if (!conn->has_expr) continue;  // explicitly unconnected
      Expr parent_side =
          rewrite_expr(conn->expr, parent, parent_env, parent_prefix);
      Expr child_side = Expr::ident(prefixed(prefix, port->name), conn->loc);
      Item it;
      it.kind = ItemKind::Assign;
      it.loc = conn->loc;
      it.assign.loc = conn->loc;
      if (port->dir == PortDir::Input) {
        it.assign.lhs = std::move(child_side);
        it.assign.rhs = std::move(parent_side);
        input_binds.push_back(std::move(it));
      } else if (port->dir == PortDir::Output) {
        if (parent_side.kind != ExprKind::Ident &&
            parent_side.kind != ExprKind::Select)
          throw unsupported_construct(
              "non-identifier connection on output port '" + port->name + "'",
              "", conn->loc.line, conn->loc.col);
        it.assign.lhs = std::move(parent_side);
        it.assign.rhs = std::move(child_side);
        output_binds.push_back(std::move(it));
      } else {
        throw unsupported_construct("inout port binding", "", conn->loc.line,
                                    conn->loc.col);
      }
    }

    for (auto& it : input_binds) out.items.push_back(std::move(it));
    inline_module(*child, overrides, prefix);
    for (auto& it : output_binds) out.items.push_back(std::move(it));
  }
};

}  // namespace

FlatDesign flatten(const Ast& ast, const std::string& top) {
  const Module* top_mod = ast.find_module(top);
  if (!top_mod)
    throw Error(ErrorKind::Elaboration, "unknown module '" + top + "'");

  Inliner in(ast);
  in.out.name = top_mod->name;
  in.out.loc = top_mod->loc;
  in.out.ports = top_mod->ports;  // top-level names keep no prefix
  in.inline_module(*top_mod, {}, "");
  {
    ParamEnv top_env = in.module_env(*top_mod, {});
    for (auto& p : in.out.ports)
      p.range = in.rewrite_range(p.range, *top_mod, top_env, "");
  }

  FlatDesign fd;
  fd.name = top;
  fd.module = std::move(in.out);

  std::set<std::string> seen;
  for (const auto& n : fd.module.nets)
    if (!seen.insert(n.name).second)
      throw Error(ErrorKind::Internal,
                  "flatten produced duplicate signal '" + n.name + "'");
  return fd;
}

std::string infer_top(const Ast& ast) {
  if (ast.modules.empty())
    throw Error(ErrorKind::Elaboration, "no modules in design");
  std::set<std::string> instantiated;
  for (const auto& m : ast.modules)
    for (const auto& it : m.items)
      if (it.kind == ItemKind::Instance)
        instantiated.insert(it.instance.module_name);
  std::vector<std::string> roots;
  for (const auto& m : ast.modules)
    if (!instantiated.count(m.name)) roots.push_back(m.name);
  if (roots.size() == 1) return roots[0];
  if (roots.empty())
    throw Error(ErrorKind::Elaboration,
                "no top module: every module is instantiated");
  std::string names;
  for (const auto& r : roots) names += (names.empty() ? "" : ", ") + r;
  throw Error(ErrorKind::Elaboration,
              "ambiguous top module (candidates: " + names +
                  "); pass the top name explicitly");
}

}  // namespace tg::rtl
