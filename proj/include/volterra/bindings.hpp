#pragma once

#include <map>
#include <string>
#include <string_view>

#include "volterra/scalar_expr.hpp"

namespace volterra {

// Separable kernel K(x, t) = k(x) h(t) attached to a kernel index. The twist
// of the index is k(x)/k(0), so k must not vanish where a twist is evaluated;
// that is checked at evaluation time, not here.
struct KernelBinding {
    std::string index;
    ScalarExpr k;
    ScalarExpr h;
};

// Concrete definitions for the kernel indices and function names appearing in
// a forest under numeric evaluation.
//
// Text format, one record per line ('#' starts a comment):
//   kernel <index> k=<expr> h=<expr>     (expressions without spaces)
//   func <name> = <expr>
struct Bindings {
    std::map<std::string, KernelBinding> kernels;
    std::map<std::string, ScalarExpr> functions;

    static Bindings parse_text(std::string_view text);
    static Bindings load_file(const std::string& path);
};

} // namespace volterra
