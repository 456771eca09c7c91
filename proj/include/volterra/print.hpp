#pragma once

#include <string>

#include "volterra/forest.hpp"
#include "volterra/rewrite.hpp"

namespace volterra {

// Operator-grammar text; parse(print_operator(f)) == f for every canonical
// forest, and equal forests print identically.
std::string print_operator(const Forest& f);

// Nested-integral display form. Human-oriented; not meant to be parsed back.
std::string print_integral(const Forest& f);

// One DOT digraph per tree, drawn root-down (rankdir=BT), deterministic
// preorder node naming, root marked with a double circle.
std::string render_dot(const Forest& f);

// One line per recorded step:
//   step=<k> tree=<n> vertex=<p1.p2...> pair=<i>,<j> E=<e> N_before=<n0>
//   D_before=<d0> N_after=<n1a>,<n1b> D_after=<d1a>,<d1b>
// Indices are 0-based; the root's empty path prints as "-".
std::string format_trace(const RewriteTrace& trace);

std::string format_metrics(const Metrics& m); // "E=<e> N=<n> D=<d>"

} // namespace volterra
