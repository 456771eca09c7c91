#include "volterra/tree.hpp"

#include <algorithm>
#include <utility>

namespace volterra {

Tree leaf(Label l) {
    return Tree{std::move(l), {}};
}

std::strong_ordering compare(const Tree& a, const Tree& b) {
    const std::size_t n = std::min(a.children.size(), b.children.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (auto c = a.children[k].index <=> b.children[k].index; c != 0) return c;
        if (auto c = compare(a.children[k].child, b.children[k].child); c != 0) return c;
    }
    if (auto c = a.children.size() <=> b.children.size(); c != 0) return c;
    return a.root <=> b.root;
}

Tree canonicalize(const Tree& t) {
    Tree out;
    out.root = t.root;
    out.children.reserve(t.children.size());
    for (const Edge& e : t.children) out.children.push_back(Edge{e.index, canonicalize(e.child)});
    std::sort(out.children.begin(), out.children.end(), [](const Edge& a, const Edge& b) {
        if (a.index != b.index) return a.index < b.index;
        return compare(a.child, b.child) < 0;
    });
    return out;
}

Tree graft(const Tree& t, const Tree& u) {
    Tree out;
    out.root = t.root * u.root;
    out.children.reserve(t.children.size() + u.children.size());
    out.children.insert(out.children.end(), t.children.begin(), t.children.end());
    out.children.insert(out.children.end(), u.children.begin(), u.children.end());
    return canonicalize(out);
}

Tree extend(const Tree& t, std::string index) {
    return Tree{Label{}, {Edge{std::move(index), canonicalize(t)}}};
}

int edge_count(const Tree& t) {
    int n = static_cast<int>(t.children.size());
    for (const Edge& e : t.children) n += edge_count(e.child);
    return n;
}

bool is_branch_free(const Tree& t) {
    if (t.children.size() >= 2) return false;
    for (const Edge& e : t.children)
        if (!is_branch_free(e.child)) return false;
    return true;
}

const Tree* vertex_at(const Tree& t, std::span<const int> path) {
    const Tree* node = &t;
    for (int pos : path) {
        if (pos < 0 || pos >= static_cast<int>(node->children.size())) return nullptr;
        node = &node->children[pos].child;
    }
    return node;
}

namespace {

void collect_branches(const Tree& node, std::vector<int>& path,
                      const std::vector<int>* deepest_branching,
                      std::vector<TerminalBranch>& out) {
    if (node.children.empty()) {
        if (!path.empty())
            out.push_back(TerminalBranch{deepest_branching ? *deepest_branching : std::vector<int>{},
                                         path});
        return;
    }
    const std::vector<int> here = path;
    const bool branching = node.children.size() >= 2;
    for (int k = 0; k < static_cast<int>(node.children.size()); ++k) {
        path.push_back(k);
        collect_branches(node.children[k].child, path, branching ? &here : deepest_branching, out);
        path.pop_back();
    }
}

} // namespace

std::vector<TerminalBranch> terminal_branches(const Tree& t) {
    std::vector<TerminalBranch> out;
    std::vector<int> path;
    collect_branches(t, path, nullptr, out);
    return out;
}

Metrics metrics(const Tree& t) {
    Metrics m;
    m.edges = edge_count(t);
    for (const TerminalBranch& b : terminal_branches(t)) {
        ++m.branches;
        m.branch_length += b.length();
    }
    return m;
}

} // namespace volterra
