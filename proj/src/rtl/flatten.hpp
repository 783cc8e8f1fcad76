#pragma once

#include <string>

#include "rtl/ast.hpp"

namespace tg::rtl {

// Inlines the instance tree under `top` into a single module. Instance-local
// names are prefixed with the dot-joined instance path and parameters are
// folded to constants. Throws Elaboration errors for unknown modules,
// recursive instantiation and unresolved parameters.
FlatDesign flatten(const Ast& ast, const std::string& top);

// Picks the unique module that is never instantiated; throws if ambiguous.
std::string infer_top(const Ast& ast);

}  // namespace tg::rtl
