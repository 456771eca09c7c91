#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "volterra/label.hpp"

namespace volterra {

struct Edge;

// Rooted tree with Label-decorated vertices and kernel-index-decorated edges.
// A plain value type; canonical form (recursively sorted sibling lists) is
// produced by canonicalize and preserved by the constructors below.
struct Tree {
    Label root;
    std::vector<Edge> children;
};

struct Edge {
    std::string index; // kernel index decorating the edge to `child`
    Tree child;
};

Tree leaf(Label l);

// Total order on trees: compare children lists lexicographically (edge index,
// then subtree), then root labels. Sibling branches commute as integrals, so
// sorting children by this order fixes a canonical representative.
std::strong_ordering compare(const Tree& a, const Tree& b);

inline bool operator==(const Tree& a, const Tree& b) { return compare(a, b) == 0; }
inline bool operator!=(const Tree& a, const Tree& b) { return compare(a, b) != 0; }

Tree canonicalize(const Tree& t);

// Root-merging product: root labels multiply, child lists concatenate.
Tree graft(const Tree& t, const Tree& u);

// New root labeled 1 below t, connected by an edge carrying `index`.
Tree extend(const Tree& t, std::string index);

int edge_count(const Tree& t);

// True when no vertex has two or more children.
bool is_branch_free(const Tree& t);

const Tree* vertex_at(const Tree& t, std::span<const int> path);

// Maximal chain from a branching point (or from the root of a branch-free
// tree with at least one edge) down to a leaf, with no branching in between.
// Vertices are identified by their child-position paths from the root.
struct TerminalBranch {
    std::vector<int> origin;
    std::vector<int> leaf;

    int length() const noexcept { return static_cast<int>(leaf.size() - origin.size()); }
};

std::vector<TerminalBranch> terminal_branches(const Tree& t);

// E/N/D bookkeeping used by the termination argument of the reduction loop.
// A single-vertex tree has all three equal to zero.
struct Metrics {
    int edges = 0;         // E
    int branches = 0;      // N, number of terminal branches
    int branch_length = 0; // D, total edge count over the terminal branches

    friend bool operator==(const Metrics&, const Metrics&) = default;
};

Metrics metrics(const Tree& t);

} // namespace volterra
