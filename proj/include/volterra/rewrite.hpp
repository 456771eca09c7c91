#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "volterra/forest.hpp"

namespace volterra {

// The two trees produced by one application of the twisted Rota-Baxter
// identity at a branching point. `first` keeps branch i hanging from the
// vertex and absorbs branch j below it; `second` is the mirror image.
struct StepOutputs {
    Tree first;
    Tree second;
};

// Applies the identity at the vertex addressed by `vertex` (child positions
// from the root) to the distinct child positions i and j. Throws StepError
// when the path is invalid, the vertex is not a branching point, or the pair
// is not two distinct valid positions. Outputs are canonical.
StepOutputs rb_step(const Tree& t, std::span<const int> vertex, int i, int j);

struct Redex {
    std::vector<int> vertex;
    int i = 0;
    int j = 1;
};

// Deepest branching point (ties broken by lexicographically smallest path)
// together with the two smallest child positions; nullopt iff branch-free.
std::optional<Redex> select_redex(const Tree& t);

struct RewriteStep {
    int input_tree = 0; // index of the originating input tree, canonical order
    Tree before;
    std::vector<int> vertex;
    int branch_i = 0;
    int branch_j = 1;
    Tree out_first;
    Tree out_second;
    Metrics metrics_before;
    Metrics metrics_first;
    Metrics metrics_second;
};

struct RewriteTrace {
    Forest input;
    Forest output;
    std::vector<RewriteStep> steps;
};

struct ReduceResult {
    Forest output;
    RewriteTrace trace;
};

// Rewrites every tree of the forest to branch-free form with the fixed
// deterministic policy (deepest redex, first two children, depth-first on the
// first output). Every step is checked for edge conservation and the (N, D)
// descent; a violation or a blown step budget raises InternalError.
ReduceResult reduce(const Forest& input);

// Step budget enforced by reduce: max(4^E, E!), saturating.
std::uint64_t step_ceiling(int total_edges);

// Re-applies the recorded steps to the trace input and returns the rebuilt
// output forest; throws InternalError on any divergence from the record.
Forest replay(const RewriteTrace& trace);

// Closed-form reduction of (single-vertex branch) x (iterated chain) hanging
// from a common root: root label `a`, side branch `f_subtree` on edge
// `side_index`, chain links (edge index, vertex label) bottom-up. Returns the
// m+1 branch-free trees directly, m being the chain length.
Forest iterated_rule(const Label& a, const std::string& side_index, const Tree& f_subtree,
                     std::span<const std::pair<std::string, Label>> chain);

} // namespace volterra
