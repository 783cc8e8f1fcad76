#pragma once

#include <string>

#include "rtl/ast.hpp"

namespace tg::rtl {

// Deterministic source emission; output re-parses to a structurally
// equivalent AST. Nested expressions are fully parenthesized.
std::string print_module(const Module& m);
std::string print_ast(const Ast& ast);
std::string print_expr(const Expr& e);

}  // namespace tg::rtl
