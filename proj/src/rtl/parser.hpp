#pragma once

#include "rtl/ast.hpp"

namespace tg::rtl {

// Parses every file of the unit into one AST. Identifier resolution and
// port-direction uniqueness are checked per module; violations throw.
Ast parse(const SourceUnit& src);

// Parses a single already-loaded file.
Ast parse_text(const std::string& path, const std::string& text);

// Evaluates a constant integer expression over a parameter environment.
// Throws Elaboration errors for unresolved names or non-constant operands.
long long eval_const(const Expr& e,
                     const std::vector<std::pair<std::string, long long>>& env);

// Parses the value of a Verilog literal ("8'hff", "100"). Throws on x/z.
long long literal_value(const std::string& text);

// Bit width of a literal if explicitly sized ("16'd5" -> 16), else 0.
int literal_width(const std::string& text);

}  // namespace tg::rtl
