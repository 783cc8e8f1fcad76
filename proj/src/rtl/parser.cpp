#include "rtl/parser.hpp"

#include <cstdlib>
#include <set>
#include <unordered_set>

#include "rtl/lexer.hpp"
#include "support/error.hpp"

namespace tg::rtl {

namespace {

const std::unordered_set<std::string> kUnsupportedKeywords = {
    "initial",  "generate", "endgenerate", "genvar",   "function",
    "endfunction", "task",  "endtask",     "integer",  "real",
    "realtime", "time",     "specify",     "primitive", "defparam",
    "casex",    "casez",    "fork",        "join",     "wait",
    "force",    "release",  "deassign",    "tri",      "tri0",
    "tri1",     "trireg",   "supply0",     "supply1",  "wand",
    "wor",      "event",    "repeat",      "while",    "for",
    "forever",  "signed",   "automatic",   "macromodule",
};

const std::unordered_set<std::string> kKeywords = {
    "module", "endmodule", "input",  "output",    "inout",  "wire",
    "reg",    "parameter", "localparam", "assign", "always", "begin",
    "end",    "if",        "else",   "case",      "endcase", "default",
    "posedge", "negedge",  "or",
};

class Parser {
 public:
  Parser(std::string path, std::vector<Token> toks)
      : path_(std::move(path)), toks_(std::move(toks)) {}

  std::vector<Module> parse_file() {
    std::vector<Module> mods;
    while (!at_end()) {
      check_supported(peek());
      expect_kw("module");
      mods.push_back(parse_module());
    }
    return mods;
  }

 private:
  std::string path_;
  std::vector<Token> toks_;
  size_t pos_ = 0;

  const Token& peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& get() {
    const Token& t = peek();
    if (t.kind != TokKind::End) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == TokKind::End; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw syntax_error(path_, t.loc.line, t.loc.col, msg);
  }
  void check_supported(const Token& t) const {
    if (t.kind == TokKind::Ident && kUnsupportedKeywords.count(t.text))
      throw unsupported_construct("'" + t.text + "'", path_, t.loc.line,
                                  t.loc.col);
    if (t.kind == TokKind::Symbol && t.text == "#")
      throw unsupported_construct("delay control", path_, t.loc.line,
                                  t.loc.col);
  }

  bool is_kw(const std::string& kw, size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == TokKind::Ident && t.text == kw;
  }
  bool is_sym(const std::string& s, size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == TokKind::Symbol && t.text == s;
  }
  void expect_kw(const std::string& kw) {
    const Token& t = peek();
    if (!is_kw(kw)) fail(t, "expected '" + kw + "'");
    get();
  }
  void expect_sym(const std::string& s) {
    const Token& t = peek();
    if (!is_sym(s)) fail(t, "expected '" + s + "'");
    get();
  }
  std::string expect_ident(const char* what) {
    const Token& t = peek();
    check_supported(t);
    if (t.kind != TokKind::Ident || kKeywords.count(t.text))
      fail(t, std::string("expected ") + what);
    return get().text;
  }

  // ---- module ----------------------------------------------------------

  Module parse_module() {
    Module m;
    m.loc = peek().loc;
    m.name = expect_ident("module name");
    if (is_sym("#")) {
      get();
      expect_sym("(");
      parse_param_decls(m, /*header=*/true);
      expect_sym(")");
    }
    std::vector<std::string> undirected_ports;
    if (is_sym("(")) {
      get();
      parse_port_list(m, undirected_ports);
      expect_sym(")");
    }
    expect_sym(";");
    while (!is_kw("endmodule")) {
      if (at_end()) fail(peek(), "missing 'endmodule'");
      parse_module_item(m, undirected_ports);
    }
    get();  // endmodule
    finalize_module(m, undirected_ports);
    return m;
  }

  void parse_param_decls(Module& m, bool header) {
    // header form: #(parameter A = 1, parameter B = 2) or #(parameter A = 1, B = 2)
    while (true) {
      if (is_kw("parameter")) get();
      Param p;
      p.loc = peek().loc;
      p.name = expect_ident("parameter name");
      expect_sym("=");
      p.value = parse_expr();
      m.params.push_back(std::move(p));
      if (is_sym(",")) {
        get();
        continue;
      }
      break;
    }
    (void)header;
  }

  void parse_port_list(Module& m, std::vector<std::string>& undirected) {
    if (is_sym(")")) return;  // empty list
    bool ansi = is_kw("input") || is_kw("output") || is_kw("inout");
    if (!ansi) {
      while (true) {
        undirected.push_back(expect_ident("port name"));
        if (is_sym(",")) {
          get();
          continue;
        }
        break;
      }
      return;
    }
    PortDir dir = PortDir::Input;
    bool is_reg = false;
    Range range;
    while (true) {
      if (is_kw("input") || is_kw("output") || is_kw("inout")) {
        const std::string d = get().text;
        dir = d == "input" ? PortDir::Input
              : d == "output" ? PortDir::Output
                              : PortDir::Inout;
        is_reg = false;
        range = Range{};
        if (is_kw("wire")) get();
        if (is_kw("reg")) {
          get();
          is_reg = true;
        }
        if (is_sym("[")) range = parse_range();
      }
      Port p;
      p.loc = peek().loc;
      p.name = expect_ident("port name");
      p.dir = dir;
      p.is_reg = is_reg;
      p.range = range;
      m.ports.push_back(std::move(p));
      if (is_sym(",")) {
        get();
        continue;
      }
      break;
    }
  }

  Range parse_range() {
    Range r;
    expect_sym("[");
    r.present = true;
    r.msb = parse_expr();
    expect_sym(":");
    r.lsb = parse_expr();
    expect_sym("]");
    return r;
  }

  void parse_module_item(Module& m, std::vector<std::string>& undirected) {
    const Token& t = peek();
    check_supported(t);
    if (t.kind != TokKind::Ident) fail(t, "expected module item");

    if (t.text == "parameter" || t.text == "localparam") {
      bool local = t.text == "localparam";
      get();
      while (true) {
        Param p;
        p.loc = peek().loc;
        p.local = local;
        p.name = expect_ident("parameter name");
        expect_sym("=");
        p.value = parse_expr();
        m.params.push_back(std::move(p));
        if (is_sym(",")) {
          get();
          continue;
        }
        break;
      }
      expect_sym(";");
      return;
    }
    if (t.text == "input" || t.text == "output" || t.text == "inout") {
      PortDir dir = t.text == "input" ? PortDir::Input
                    : t.text == "output" ? PortDir::Output
                                         : PortDir::Inout;
      get();
      bool is_reg = false;
      if (is_kw("wire")) get();
      if (is_kw("reg")) {
        get();
        is_reg = true;
      }
      Range range;
      if (is_sym("[")) range = parse_range();
      while (true) {
        Port p;
        p.loc = peek().loc;
        p.name = expect_ident("port name");
        p.dir = dir;
        p.is_reg = is_reg;
        p.range = range;
        bool listed = false;
        for (const auto& u : undirected) listed = listed || u == p.name;
        if (!listed)
          fail(toks_[pos_ - 1], "port '" + p.name + "' not in module port list");
        m.ports.push_back(std::move(p));
        if (is_sym(",")) {
          get();
          continue;
        }
        break;
      }
      expect_sym(";");
      return;
    }
    if (t.text == "wire" || t.text == "reg") {
      bool is_reg = t.text == "reg";
      get();
      Range range;
      if (is_sym("[")) range = parse_range();
      while (true) {
        Net n;
        n.loc = peek().loc;
        n.name = expect_ident("net name");
        n.is_reg = is_reg;
        n.range = range;
        if (is_sym("[")) {
          const Token& arr = peek();
          throw unsupported_construct("memory array", path_, arr.loc.line,
                                      arr.loc.col);
        }
        if (is_sym("=")) {
          // net declaration assignment: wire x = expr;
          if (is_reg)
            throw unsupported_construct("reg initializer", path_,
                                        peek().loc.line, peek().loc.col);
          get();
          Item it;
          it.kind = ItemKind::Assign;
          it.loc = n.loc;
          it.assign.loc = n.loc;
          it.assign.lhs = Expr::ident(n.name, n.loc);
          it.assign.rhs = parse_expr();
          m.nets.push_back(n);
          m.items.push_back(std::move(it));
        } else {
          m.nets.push_back(std::move(n));
        }
        if (is_sym(",")) {
          get();
          continue;
        }
        break;
      }
      expect_sym(";");
      return;
    }
    if (t.text == "assign") {
      get();
      while (true) {
        Item it;
        it.kind = ItemKind::Assign;
        it.loc = peek().loc;
        it.assign.loc = it.loc;
        it.assign.lhs = parse_lvalue();
        expect_sym("=");
        it.assign.rhs = parse_expr();
        m.items.push_back(std::move(it));
        if (is_sym(",")) {
          get();
          continue;
        }
        break;
      }
      expect_sym(";");
      return;
    }
    if (t.text == "always") {
      get();
      Item it;
      it.kind = ItemKind::Always;
      it.loc = t.loc;
      it.always.loc = t.loc;
      expect_sym("@");
      if (is_sym("*")) {
        get();
        it.always.star = true;
      } else {
        expect_sym("(");
        if (is_sym("*")) {
          get();
          it.always.star = true;
        } else {
          while (true) {
            SensItem s;
            if (is_kw("posedge")) {
              get();
              s.edge = EdgeKind::Pos;
            } else if (is_kw("negedge")) {
              get();
              s.edge = EdgeKind::Neg;
            }
            s.signal = expect_ident("sensitivity signal");
            it.always.sensitivity.push_back(std::move(s));
            if (is_kw("or") || is_sym(",")) {
              get();
              continue;
            }
            break;
          }
        }
        expect_sym(")");
      }
      it.always.body = parse_stmt();
      m.items.push_back(std::move(it));
      return;
    }
    if (kKeywords.count(t.text)) fail(t, "unexpected '" + t.text + "'");

    // Module instantiation: name [#(...)] inst (conns) {, inst (conns)} ;
    std::string module_name = get().text;
    std::vector<Connection> overrides;
    if (is_sym("#")) {
      get();
      expect_sym("(");
      overrides = parse_connection_list();
      expect_sym(")");
    }
    while (true) {
      Item it;
      it.kind = ItemKind::Instance;
      it.loc = peek().loc;
      it.instance.loc = it.loc;
      it.instance.module_name = module_name;
      it.instance.param_overrides = overrides;
      it.instance.instance_name = expect_ident("instance name");
      expect_sym("(");
      it.instance.connections = parse_connection_list();
      expect_sym(")");
      m.items.push_back(std::move(it));
      if (is_sym(",")) {
        get();
        continue;
      }
      break;
    }
    expect_sym(";");
  }

  std::vector<Connection> parse_connection_list() {
    std::vector<Connection> conns;
    if (is_sym(")")) return conns;
    while (true) {
      Connection c;
      c.loc = peek().loc;
      if (is_sym(".")) {
        get();
        c.port = expect_ident("port name");
        expect_sym("(");
        if (!is_sym(")")) {
          c.expr = parse_expr();
          c.has_expr = true;
        }
        expect_sym(")");
      } else {
        c.expr = parse_expr();
        c.has_expr = true;
      }
      conns.push_back(std::move(c));
      if (is_sym(",")) {
        get();
        continue;
      }
      break;
    }
    return conns;
  }

  // ---- statements ------------------------------------------------------

  Stmt parse_stmt() {
    const Token& t = peek();
    check_supported(t);
    if (is_kw("begin")) {
      get();
      Stmt s;
      s.kind = StmtKind::Block;
      s.loc = t.loc;
      while (!is_kw("end")) {
        if (at_end()) fail(peek(), "missing 'end'");
        s.stmts.push_back(parse_stmt());
      }
      get();
      return s;
    }
    if (is_kw("if")) {
      get();
      Stmt s;
      s.kind = StmtKind::If;
      s.loc = t.loc;
      expect_sym("(");
      s.cond = parse_expr();
      expect_sym(")");
      s.then_stmts.push_back(parse_stmt());
      if (is_kw("else")) {
        get();
        s.else_stmts.push_back(parse_stmt());
      }
      return s;
    }
    if (is_kw("case")) {
      get();
      Stmt s;
      s.kind = StmtKind::Case;
      s.loc = t.loc;
      expect_sym("(");
      s.cond = parse_expr();
      expect_sym(")");
      while (!is_kw("endcase")) {
        if (at_end()) fail(peek(), "missing 'endcase'");
        CaseItem item;
        item.loc = peek().loc;
        if (is_kw("default")) {
          get();
          if (is_sym(":")) get();
        } else {
          while (true) {
            item.labels.push_back(parse_expr());
            if (is_sym(",")) {
              get();
              continue;
            }
            break;
          }
          expect_sym(":");
        }
        item.body.push_back(parse_stmt());
        s.case_items.push_back(std::move(item));
      }
      get();
      return s;
    }
    // assignment
    Stmt s;
    s.kind = StmtKind::Assign;
    s.loc = t.loc;
    s.lhs = parse_lvalue();
    if (is_sym("<=")) {
      get();
      s.nonblocking = true;
    } else if (is_sym("=")) {
      get();
    } else {
      fail(peek(), "expected '=' or '<='");
    }
    s.rhs = parse_expr();
    expect_sym(";");
    return s;
  }

  Expr parse_lvalue() {
    const Token& t = peek();
    if (is_sym("{"))
      throw unsupported_construct("concatenation on assignment target", path_,
                                  t.loc.line, t.loc.col);
    std::string name = expect_ident("assignment target");
    Expr base = Expr::ident(name, t.loc);
    if (is_sym("[")) return parse_select(std::move(base));
    return base;
  }

  // ---- expressions -----------------------------------------------------

  Expr parse_expr() { return parse_ternary(); }

  Expr parse_ternary() {
    Expr c = parse_binary(0);
    if (is_sym("?")) {
      Loc loc = peek().loc;
      get();
      Expr a = parse_ternary();
      expect_sym(":");
      Expr b = parse_ternary();
      return Expr::ternary(std::move(c), std::move(a), std::move(b), loc);
    }
    return c;
  }

  struct OpLevel {
    const char* sym;
    const char* name;
  };

  // Precedence levels, loosest first; entries on one level are left-assoc.
  static const std::vector<std::vector<OpLevel>>& levels() {
    static const std::vector<std::vector<OpLevel>> table = {
        {{"||", "lor"}},
        {{"&&", "land"}},
        {{"|", "or"}},
        {{"^", "xor"}, {"~^", "xnor"}, {"^~", "xnor"}},
        {{"&", "and"}},
        {{"==", "eq"}, {"!=", "ne"}},
        {{"<", "lt"}, {"<=", "le"}, {">", "gt"}, {">=", "ge"}},
        {{"<<", "shl"}, {">>", "shr"}},
        {{"+", "add"}, {"-", "sub"}},
        {{"*", "mul"}},
    };
    return table;
  }

  Expr parse_binary(size_t level) {
    if (level >= levels().size()) return parse_unary();
    Expr lhs = parse_binary(level + 1);
    while (true) {
      const char* opname = nullptr;
      for (const auto& cand : levels()[level]) {
        if (is_sym(cand.sym)) {
          opname = cand.name;
          break;
        }
      }
      if (!opname) return lhs;
      Loc loc = peek().loc;
      get();
      Expr rhs = parse_binary(level + 1);
      lhs = Expr::binary(opname, std::move(lhs), std::move(rhs), loc);
    }
  }

  Expr parse_unary() {
    const Token& t = peek();
    if (t.kind == TokKind::Symbol) {
      const char* op = nullptr;
      if (t.text == "~") op = "not";
      else if (t.text == "!") op = "lnot";
      else if (t.text == "-") op = "neg";
      else if (t.text == "+") op = "pos";
      else if (t.text == "&") op = "red_and";
      else if (t.text == "|") op = "red_or";
      else if (t.text == "^") op = "red_xor";
      else if (t.text == "~&") op = "red_nand";
      else if (t.text == "~|") op = "red_nor";
      else if (t.text == "~^" || t.text == "^~") op = "red_xnor";
      if (op) {
        get();
        Expr operand = parse_unary();
        if (std::string(op) == "pos") return operand;  // unary plus is a no-op
        return Expr::unary(op, std::move(operand), t.loc);
      }
    }
    return parse_primary();
  }

  Expr parse_primary() {
    const Token& t = peek();
    check_supported(t);
    if (t.kind == TokKind::Number) {
      get();
      return Expr::number(t.text, t.loc);
    }
    if (is_sym("(")) {
      get();
      Expr e = parse_expr();
      expect_sym(")");
      return e;
    }
    if (is_sym("{")) {
      get();
      Expr first = parse_expr();
      if (is_sym("{")) {
        // replication {N{expr}}
        get();
        Expr rep;
        rep.kind = ExprKind::Repeat;
        rep.loc = t.loc;
        rep.children.push_back(std::move(first));
        Expr value;
        value.kind = ExprKind::Concat;
        value.loc = peek().loc;
        while (true) {
          value.children.push_back(parse_expr());
          if (is_sym(",")) {
            get();
            continue;
          }
          break;
        }
        expect_sym("}");
        expect_sym("}");
        if (value.children.size() == 1)
          rep.children.push_back(std::move(value.children[0]));
        else
          rep.children.push_back(std::move(value));
        return rep;
      }
      Expr cat;
      cat.kind = ExprKind::Concat;
      cat.loc = t.loc;
      cat.children.push_back(std::move(first));
      while (is_sym(",")) {
        get();
        cat.children.push_back(parse_expr());
      }
      expect_sym("}");
      return cat;
    }
    if (t.kind == TokKind::Ident && !kKeywords.count(t.text)) {
      get();
      Expr base = Expr::ident(t.text, t.loc);
      if (is_sym("("))
        throw unsupported_construct("function call", path_, t.loc.line,
                                    t.loc.col);
      if (is_sym("[")) return parse_select(std::move(base));
      return base;
    }
    fail(t, "expected expression");
  }

  Expr parse_select(Expr base) {
    Loc loc = peek().loc;
    expect_sym("[");
    Expr sel;
    sel.kind = ExprKind::Select;
    sel.loc = loc;
    sel.children.push_back(std::move(base));
    sel.children.push_back(parse_expr());
    if (is_sym(":")) {
      get();
      sel.children.push_back(parse_expr());
    }
    expect_sym("]");
    // chained selects (a[3][1]) are outside the subset
    if (is_sym("[")) {
      const Token& t = peek();
      throw unsupported_construct("chained select", path_, t.loc.line,
                                  t.loc.col);
    }
    return sel;
  }

  // ---- post-parse checks -----------------------------------------------

  void finalize_module(Module& m, const std::vector<std::string>& undirected) {
    // Every port named in a non-ANSI header must have a direction by now.
    std::set<std::string> port_names;
    for (const auto& p : m.ports) {
      if (!port_names.insert(p.name).second)
        throw syntax_error(path_, p.loc.line, p.loc.col,
                           "duplicate direction for port '" + p.name + "'");
    }
    for (const auto& u : undirected) {
      if (!port_names.count(u))
        throw syntax_error(path_, m.loc.line, m.loc.col,
                           "port '" + u + "' has no direction declaration");
    }
    // Reorder ports to the header order for non-ANSI modules.
    if (!undirected.empty()) {
      std::vector<Port> ordered;
      for (const auto& u : undirected)
        for (const auto& p : m.ports)
          if (p.name == u) ordered.push_back(p);
      m.ports = std::move(ordered);
    }
    // Ports are nets too; add implicit entries unless declared separately.
    for (const auto& p : m.ports) {
      Net* existing = nullptr;
      for (auto& n : m.nets)
        if (n.name == p.name) existing = &n;
      if (existing) {
        if (!existing->range.present) existing->range = p.range;
        existing->is_reg = existing->is_reg || p.is_reg;
      } else {
        Net n;
        n.name = p.name;
        n.is_reg = p.is_reg;
        n.range = p.range;
        n.loc = p.loc;
        m.nets.push_back(std::move(n));
      }
    }
    std::set<std::string> net_names;
    for (const auto& n : m.nets) {
      if (!net_names.insert(n.name).second)
        throw syntax_error(path_, n.loc.line, n.loc.col,
                           "duplicate declaration of '" + n.name + "'");
    }
    std::set<std::string> param_names;
    for (const auto& p : m.params) {
      if (!param_names.insert(p.name).second)
        throw syntax_error(path_, p.loc.line, p.loc.col,
                           "duplicate parameter '" + p.name + "'");
      if (net_names.count(p.name))
        throw syntax_error(path_, p.loc.line, p.loc.col,
                           "parameter '" + p.name + "' collides with a net");
    }
    std::set<std::string> instance_names;
    for (const auto& it : m.items) {
      if (it.kind != ItemKind::Instance) continue;
      if (!instance_names.insert(it.instance.instance_name).second)
        throw syntax_error(path_, it.loc.line, it.loc.col,
                           "duplicate instance name '" +
                               it.instance.instance_name + "'");
    }
  }
};

void check_expr_resolution(const Module& m, const Expr& e,
                           const std::string& path) {
  if (e.kind == ExprKind::Ident) {
    if (!m.find_net(e.text) && !m.find_param(e.text))
      throw syntax_error(path, e.loc.line, e.loc.col,
                         "unresolved identifier '" + e.text + "'");
  }
  for (const auto& c : e.children) check_expr_resolution(m, c, path);
}

void check_stmt_resolution(const Module& m, const Stmt& s,
                           const std::string& path) {
  switch (s.kind) {
    case StmtKind::Assign:
      check_expr_resolution(m, s.lhs, path);
      check_expr_resolution(m, s.rhs, path);
      break;
    case StmtKind::If:
      check_expr_resolution(m, s.cond, path);
      for (const auto& t : s.then_stmts) check_stmt_resolution(m, t, path);
      for (const auto& t : s.else_stmts) check_stmt_resolution(m, t, path);
      break;
    case StmtKind::Case:
      check_expr_resolution(m, s.cond, path);
      for (const auto& item : s.case_items) {
        for (const auto& l : item.labels) check_expr_resolution(m, l, path);
        for (const auto& t : item.body) check_stmt_resolution(m, t, path);
      }
      break;
    case StmtKind::Block:
      for (const auto& t : s.stmts) check_stmt_resolution(m, t, path);
      break;
  }
}

void check_module_resolution(const Module& m, const std::string& path) {
  for (const auto& n : m.nets) {
    if (n.range.present) {
      check_expr_resolution(m, n.range.msb, path);
      check_expr_resolution(m, n.range.lsb, path);
    }
  }
  for (const auto& p : m.params) check_expr_resolution(m, p.value, path);
  for (const auto& it : m.items) {
    switch (it.kind) {
      case ItemKind::Assign:
        check_expr_resolution(m, it.assign.lhs, path);
        check_expr_resolution(m, it.assign.rhs, path);
        break;
      case ItemKind::Always:
        for (const auto& s : it.always.sensitivity)
          if (!m.find_net(s.signal))
            throw syntax_error(path, it.loc.line, it.loc.col,
                               "unresolved identifier '" + s.signal + "'");
        check_stmt_resolution(m, it.always.body, path);
        break;
      case ItemKind::Instance:
        for (const auto& c : it.instance.connections)
          if (c.has_expr) check_expr_resolution(m, c.expr, path);
        for (const auto& c : it.instance.param_overrides)
          if (c.has_expr) check_expr_resolution(m, c.expr, path);
        break;
    }
  }
}

}  // namespace

Ast parse_text(const std::string& path, const std::string& text) {
  Parser p(path, tokenize(path, text));
  Ast ast;
  ast.modules = p.parse_file();
  for (const auto& m : ast.modules) check_module_resolution(m, path);
  return ast;
}

Ast parse(const SourceUnit& src) {
  if (src.files.empty())
    throw Error(ErrorKind::Io, "source unit has no files");
  Ast ast;
  std::set<std::string> names;
  for (const auto& f : src.files) {
    Ast one = parse_text(f.path, f.text);
    for (auto& m : one.modules) {
      if (!names.insert(m.name).second)
        throw syntax_error(f.path, m.loc.line, m.loc.col,
                           "duplicate module '" + m.name + "'");
      ast.modules.push_back(std::move(m));
    }
  }
  return ast;
}

long long literal_value(const std::string& text) {
  size_t tick = text.find('\'');
  if (tick == std::string::npos) {
    return std::strtoll(text.c_str(), nullptr, 10);
  }
  char base_ch = text[tick + 1];
  int base = base_ch == 'b' ? 2 : base_ch == 'o' ? 8 : base_ch == 'd' ? 10 : 16;
  std::string digits = text.substr(tick + 2);
  for (char c : digits)
    if (c == 'x' || c == 'z')
      throw Error(ErrorKind::Elaboration,
                  "cannot evaluate literal with x/z digits: " + text);
  return std::strtoll(digits.c_str(), nullptr, base);
}

int literal_width(const std::string& text) {
  size_t tick = text.find('\'');
  if (tick == std::string::npos || tick == 0) return 0;
  return static_cast<int>(std::strtol(text.substr(0, tick).c_str(), nullptr, 10));
}

long long eval_const(
    const Expr& e, const std::vector<std::pair<std::string, long long>>& env) {
  switch (e.kind) {
    case ExprKind::Number:
      return literal_value(e.text);
    case ExprKind::Ident: {
      for (const auto& [name, value] : env)
        if (name == e.text) return value;
      throw Error(ErrorKind::Elaboration,
                  "unresolved parameter '" + e.text + "'");
    }
    case ExprKind::Unary: {
      long long v = eval_const(e.children[0], env);
      if (e.text == "not") return ~v;
      if (e.text == "lnot") return v == 0 ? 1 : 0;
      if (e.text == "neg") return -v;
      throw Error(ErrorKind::Elaboration,
                  "operator '" + e.text + "' not allowed in constant context");
    }
    case ExprKind::Binary: {
      long long a = eval_const(e.children[0], env);
      long long b = eval_const(e.children[1], env);
      if (e.text == "add") return a + b;
      if (e.text == "sub") return a - b;
      if (e.text == "mul") return a * b;
      if (e.text == "shl") return a << b;
      if (e.text == "shr") return static_cast<long long>(
          static_cast<unsigned long long>(a) >> b);
      if (e.text == "and") return a & b;
      if (e.text == "or") return a | b;
      if (e.text == "xor") return a ^ b;
      if (e.text == "xnor") return ~(a ^ b);
      if (e.text == "lt") return a < b;
      if (e.text == "gt") return a > b;
      if (e.text == "le") return a <= b;
      if (e.text == "ge") return a >= b;
      if (e.text == "eq") return a == b;
      if (e.text == "ne") return a != b;
      if (e.text == "land") return (a != 0 && b != 0) ? 1 : 0;
      if (e.text == "lor") return (a != 0 || b != 0) ? 1 : 0;
      throw Error(ErrorKind::Elaboration,
                  "operator '" + e.text + "' not allowed in constant context");
    }
    case ExprKind::Ternary:
      return eval_const(e.children[0], env) ? eval_const(e.children[1], env)
                                            : eval_const(e.children[2], env);
    default:
      throw Error(ErrorKind::Elaboration,
                  "expression not constant");
  }
}

}  // namespace tg::rtl
