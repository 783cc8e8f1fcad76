#pragma once

#include <string>
#include <vector>

#include "rtl/ast.hpp"

namespace tg::rtl {

enum class TokKind { Ident, Number, Symbol, End };

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  Loc loc;
};

// Tokenizes one source file. Comments, compiler directives (lines starting
// with a backquote) and attribute blocks `(* ... *)` are blanked out before
// scanning so token positions stay true to the original text.
std::vector<Token> tokenize(const std::string& path, const std::string& text);

}  // namespace tg::rtl
