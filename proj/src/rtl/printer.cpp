#include "rtl/printer.hpp"

#include <sstream>

#include "support/error.hpp"

namespace tg::rtl {

namespace {

const char* binary_symbol(const std::string& op) {
  if (op == "and") return "&";
  if (op == "or") return "|";
  if (op == "xor") return "^";
  if (op == "xnor") return "~^";
  if (op == "add") return "+";
  if (op == "sub") return "-";
  if (op == "mul") return "*";
  if (op == "shl") return "<<";
  if (op == "shr") return ">>";
  if (op == "lt") return "<";
  if (op == "gt") return ">";
  if (op == "le") return "<=";
  if (op == "ge") return ">=";
  if (op == "eq") return "==";
  if (op == "ne") return "!=";
  if (op == "land") return "&&";
  if (op == "lor") return "||";
  throw Error(ErrorKind::Internal, "unknown binary operator: " + op);
}

const char* unary_symbol(const std::string& op) {
  if (op == "not") return "~";
  if (op == "lnot") return "!";
  if (op == "neg") return "-";
  if (op == "red_and") return "&";
  if (op == "red_or") return "|";
  if (op == "red_xor") return "^";
  if (op == "red_nand") return "~&";
  if (op == "red_nor") return "~|";
  if (op == "red_xnor") return "~^";
  throw Error(ErrorKind::Internal, "unknown unary operator: " + op);
}

void emit_expr(std::ostream& os, const Expr& e, bool parenthesize) {
  switch (e.kind) {
    case ExprKind::Number:
    case ExprKind::Ident:
      os << e.text;
      break;
    case ExprKind::Unary:
      if (parenthesize) os << '(';
      os << unary_symbol(e.text);
      emit_expr(os, e.children[0], true);
      if (parenthesize) os << ')';
      break;
    case ExprKind::Binary:
      if (parenthesize) os << '(';
      emit_expr(os, e.children[0], true);
      os << ' ' << binary_symbol(e.text) << ' ';
      emit_expr(os, e.children[1], true);
      if (parenthesize) os << ')';
      break;
    case ExprKind::Ternary:
      if (parenthesize) os << '(';
      emit_expr(os, e.children[0], true);
      os << " ? ";
      emit_expr(os, e.children[1], true);
      os << " : ";
      emit_expr(os, e.children[2], true);
      if (parenthesize) os << ')';
      break;
    case ExprKind::Concat: {
      os << '{';
      for (size_t i = 0; i < e.children.size(); ++i) {
        if (i) os << ", ";
        emit_expr(os, e.children[i], false);
      }
      os << '}';
      break;
    }
    case ExprKind::Repeat:
      os << '{';
      emit_expr(os, e.children[0], true);
      os << '{';
      emit_expr(os, e.children[1], false);
      os << "}}";
      break;
    case ExprKind::Select:
      emit_expr(os, e.children[0], false);
      os << '[';
      emit_expr(os, e.children[1], false);
      if (e.children.size() == 3) {
        os << ':';
        emit_expr(os, e.children[2], false);
      }
      os << ']';
      break;
  }
}

std::string range_text(const Range& r) {
  if (!r.present) return "";
  std::ostringstream os;
  os << '[';
  emit_expr(os, r.msb, false);
  os << ':';
  emit_expr(os, r.lsb, false);
  os << "] ";
  return os.str();
}

void emit_stmt(std::ostream& os, const Stmt& s, int indent) {
  std::string pad(static_cast<size_t>(indent) * 2, ' ');
  switch (s.kind) {
    case StmtKind::Block:
      os << pad << "begin\n";
      for (const auto& t : s.stmts) emit_stmt(os, t, indent + 1);
      os << pad << "end\n";
      break;
    case StmtKind::Assign:
      os << pad;
      emit_expr(os, s.lhs, false);
      os << (s.nonblocking ? " <= " : " = ");
      emit_expr(os, s.rhs, true);
      os << ";\n";
      break;
    case StmtKind::If:
      os << pad << "if (";
      emit_expr(os, s.cond, false);
      os << ")\n";
      emit_stmt(os, s.then_stmts[0], indent + 1);
      if (!s.else_stmts.empty()) {
        os << pad << "else\n";
        emit_stmt(os, s.else_stmts[0], indent + 1);
      }
      break;
    case StmtKind::Case:
      os << pad << "case (";
      emit_expr(os, s.cond, false);
      os << ")\n";
      for (const auto& item : s.case_items) {
        os << pad << "  ";
        if (item.labels.empty()) {
          os << "default:";
        } else {
          for (size_t i = 0; i < item.labels.size(); ++i) {
            if (i) os << ", ";
            emit_expr(os, item.labels[i], false);
          }
          os << ':';
        }
        os << '\n';
        emit_stmt(os, item.body[0], indent + 2);
      }
      os << pad << "endcase\n";
      break;
  }
}

}  // namespace

std::string print_expr(const Expr& e) {
  std::ostringstream os;
  emit_expr(os, e, false);
  return os.str();
}

std::string print_module(const Module& m) {
  std::ostringstream os;
  os << "module " << m.name;
  bool has_nonlocal = false;
  for (const auto& p : m.params) has_nonlocal = has_nonlocal || !p.local;
  if (has_nonlocal) {
    os << " #(\n";
    bool first = true;
    for (const auto& p : m.params) {
      if (p.local) continue;
      if (!first) os << ",\n";
      first = false;
      os << "  parameter " << p.name << " = ";
      emit_expr(os, p.value, true);
    }
    os << "\n)";
  }
  os << " (\n";
  for (size_t i = 0; i < m.ports.size(); ++i) {
    const Port& p = m.ports[i];
    // The net entry carries the merged range/reg-ness for non-ANSI decls.
    const Net* n = m.find_net(p.name);
    bool is_reg = n ? n->is_reg : p.is_reg;
    const Range& r = (n && n->range.present) ? n->range : p.range;
    os << "  "
       << (p.dir == PortDir::Input ? "input"
           : p.dir == PortDir::Output ? "output"
                                      : "inout");
    if (is_reg) os << " reg";
    os << ' ' << range_text(r) << p.name;
    if (i + 1 < m.ports.size()) os << ',';
    os << '\n';
  }
  os << ");\n";
  for (const auto& p : m.params) {
    if (!p.local) continue;
    os << "  localparam " << p.name << " = ";
    emit_expr(os, p.value, true);
    os << ";\n";
  }
  for (const auto& n : m.nets) {
    if (m.find_port(n.name)) continue;  // declared in the header
    os << "  " << (n.is_reg ? "reg " : "wire ") << range_text(n.range)
       << n.name << ";\n";
  }
  for (const auto& it : m.items) {
    switch (it.kind) {
      case ItemKind::Assign:
        os << "  assign ";
        emit_expr(os, it.assign.lhs, false);
        os << " = ";
        emit_expr(os, it.assign.rhs, true);
        os << ";\n";
        break;
      case ItemKind::Always: {
        os << "  always @(";
        if (it.always.star) {
          os << '*';
        } else {
          for (size_t i = 0; i < it.always.sensitivity.size(); ++i) {
            const SensItem& s = it.always.sensitivity[i];
            if (i) os << " or ";
            if (s.edge == EdgeKind::Pos) os << "posedge ";
            if (s.edge == EdgeKind::Neg) os << "negedge ";
            os << s.signal;
          }
        }
        os << ")\n";
        emit_stmt(os, it.always.body, 2);
        break;
      }
      case ItemKind::Instance: {
        const Instance& inst = it.instance;
        os << "  " << inst.module_name;
        if (!inst.param_overrides.empty()) {
          os << " #(";
          for (size_t i = 0; i < inst.param_overrides.size(); ++i) {
            const Connection& c = inst.param_overrides[i];
            if (i) os << ", ";
            if (!c.port.empty()) os << '.' << c.port << '(';
            if (c.has_expr) emit_expr(os, c.expr, false);
            if (!c.port.empty()) os << ')';
          }
          os << ')';
        }
        os << ' ' << inst.instance_name << " (";
        for (size_t i = 0; i < inst.connections.size(); ++i) {
          const Connection& c = inst.connections[i];
          if (i) os << ", ";
          if (!c.port.empty()) os << '.' << c.port << '(';
          if (c.has_expr) emit_expr(os, c.expr, false);
          if (!c.port.empty()) os << ')';
        }
        os << ");\n";
        break;
      }
    }
  }
  os << "endmodule\n";
  return os.str();
}

std::string print_ast(const Ast& ast) {
  std::string out;
  for (size_t i = 0; i < ast.modules.size(); ++i) {
    if (i) out += "\n";
    out += print_module(ast.modules[i]);
  }
  return out;
}

}  // namespace tg::rtl
