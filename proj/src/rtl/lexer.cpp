#include "rtl/lexer.hpp"

#include <cctype>

#include "support/error.hpp"

namespace tg::rtl {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

// Replaces comments, directive lines and attribute blocks with spaces,
// newlines preserved.
std::string blank_ignored(const std::string& path, const std::string& in) {
  std::string out = in;
  size_t i = 0;
  auto blank = [&](size_t from, size_t to) {
    for (size_t k = from; k < to && k < out.size(); ++k)
      if (out[k] != '\n') out[k] = ' ';
  };
  bool at_line_start = true;
  int line = 1;
  while (i < out.size()) {
    char c = out[i];
    if (c == '\n') {
      ++line;
      at_line_start = true;
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < out.size() && out[i + 1] == '/') {
      size_t j = i;
      while (j < out.size() && out[j] != '\n') ++j;
      blank(i, j);
      i = j;
      continue;
    }
    if (c == '/' && i + 1 < out.size() && out[i + 1] == '*') {
      size_t j = i + 2;
      while (j + 1 < out.size() && !(out[j] == '*' && out[j + 1] == '/')) {
        if (out[j] == '\n') ++line;
        ++j;
      }
      if (j + 1 >= out.size())
        throw syntax_error(path, line, 1, "unterminated block comment");
      blank(i, j + 2);
      i = j + 2;
      continue;
    }
    if (c == '`' && at_line_start) {
      // Compiler directive: drop the whole line (pre-parse normalization).
      size_t j = i;
      while (j < out.size() && out[j] != '\n') ++j;
      blank(i, j);
      i = j;
      continue;
    }
    if (c == '(' && i + 1 < out.size() && out[i + 1] == '*' &&
        (i + 2 >= out.size() || out[i + 2] != ')')) {
      size_t j = i + 2;
      while (j + 1 < out.size() && !(out[j] == '*' && out[j + 1] == ')')) {
        if (out[j] == '\n') ++line;
        ++j;
      }
      if (j + 1 >= out.size())
        throw syntax_error(path, line, 1, "unterminated attribute");
      blank(i, j + 2);
      i = j + 2;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) at_line_start = false;
    ++i;
  }
  return out;
}

const char* kSymbols[] = {
    "<<", ">>", "<=", ">=", "==", "!=", "&&", "||", "~^", "^~", "~&", "~|",
    "(",  ")",  "[",  "]",  "{",  "}",  ",",  ";",  ":",  "?",  "=",  "@",
    "#",  ".",  "&",  "|",  "^",  "~",  "!",  "<",  ">",  "+",  "-",  "*",
};

}  // namespace

std::vector<Token> tokenize(const std::string& path, const std::string& text) {
  std::string src = blank_ignored(path, text);
  std::vector<Token> toks;
  size_t i = 0;
  int line = 1, col = 1;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };

  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Loc loc{line, col};
    if (ident_start(c)) {
      size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string word = src.substr(i, j - i);
      if (word.find('$') != std::string::npos)
        throw unsupported_construct("system identifier '" + word + "'", path,
                                    loc.line, loc.col);
      toks.push_back({TokKind::Ident, std::move(word), loc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '\'') {
      // Number: optional decimal size, optional 'b/'o/'d/'h base, digits with
      // underscores. Normalized by dropping underscores and lowercasing.
      size_t j = i;
      while (j < src.size() &&
             (std::isdigit(static_cast<unsigned char>(src[j])) ||
              src[j] == '_'))
        ++j;
      if (j < src.size() && src[j] == '\'') {
        ++j;
        if (j < src.size() && (src[j] == 's' || src[j] == 'S'))
          throw unsupported_construct("signed literal", path, loc.line,
                                      loc.col);
        if (j >= src.size() ||
            std::string("bBoOdDhH").find(src[j]) == std::string::npos)
          throw syntax_error(path, line, col, "malformed based literal");
        ++j;
        size_t digits = 0;
        while (j < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[j])) ||
                src[j] == '_')) {
          if (src[j] != '_') ++digits;
          ++j;
        }
        if (digits == 0)
          throw syntax_error(path, line, col, "based literal has no digits");
      }
      std::string lit;
      for (size_t k = i; k < j; ++k) {
        if (src[k] == '_') continue;
        lit.push_back(static_cast<char>(
            std::tolower(static_cast<unsigned char>(src[k]))));
      }
      toks.push_back({TokKind::Number, std::move(lit), loc});
      advance(j - i);
      continue;
    }
    if (c == '\\')
      throw unsupported_construct("escaped identifier", path, loc.line,
                                  loc.col);
    if (c == '"')
      throw unsupported_construct("string literal", path, loc.line, loc.col);
    bool matched = false;
    for (const char* sym : kSymbols) {
      size_t n = std::char_traits<char>::length(sym);
      if (src.compare(i, n, sym) == 0) {
        toks.push_back({TokKind::Symbol, sym, loc});
        advance(n);
        matched = true;
        break;
      }
    }
    if (!matched)
      throw syntax_error(path, line, col,
                         std::string("unexpected character '") + c + "'");
  }
  toks.push_back({TokKind::End, "", {line, col}});
  return toks;
}

}  // namespace tg::rtl
