#include "volterra/rewrite.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

#include "volterra/errors.hpp"

namespace volterra {

namespace {

// Rebuilds the tree with the identity applied at the end of `path`: the
// vertex gains the twist of the dropped edge, the kept child gains the
// inverse twist plus the dropped branch as an extra child.
Tree transform_at(const Tree& node, std::span<const int> path, int keep_pos, int drop_pos) {
    if (!path.empty()) {
        Tree out = node;
        out.children[path.front()].child =
            transform_at(node.children[path.front()].child, path.subspan(1), keep_pos, drop_pos);
        return out;
    }
    Edge keep = node.children[keep_pos];
    Edge drop = node.children[drop_pos];
    Tree out;
    out.root = node.root * Label::twist(drop.index);
    keep.child.root = keep.child.root * Label::twist_inv(drop.index);
    keep.child.children.push_back(std::move(drop));
    out.children.reserve(node.children.size() - 1);
    out.children.push_back(std::move(keep));
    for (int k = 0; k < static_cast<int>(node.children.size()); ++k)
        if (k != keep_pos && k != drop_pos) out.children.push_back(node.children[k]);
    return out;
}

} // namespace

StepOutputs rb_step(const Tree& t, std::span<const int> vertex, int i, int j) {
    const Tree* x = vertex_at(t, vertex);
    if (!x) throw StepError(StepError::Code::bad_path, "vertex path does not address a vertex");
    const int m = static_cast<int>(x->children.size());
    if (m < 2)
        throw StepError(StepError::Code::not_branching, "vertex is not a branching point");
    if (i == j || i < 0 || j < 0 || i >= m || j >= m)
        throw StepError(StepError::Code::bad_pair,
                        "branch pair must be two distinct valid child positions");
    return StepOutputs{canonicalize(transform_at(t, vertex, i, j)),
                       canonicalize(transform_at(t, vertex, j, i))};
}

namespace {

void deepest_branching(const Tree& node, std::vector<int>& path,
                       std::optional<std::vector<int>>& best) {
    // Preorder visits paths in lexicographic order, so a strict depth
    // improvement keeps the smallest path among equals.
    if (node.children.size() >= 2 && (!best || path.size() > best->size())) best = path;
    for (int k = 0; k < static_cast<int>(node.children.size()); ++k) {
        path.push_back(k);
        deepest_branching(node.children[k].child, path, best);
        path.pop_back();
    }
}

} // namespace

std::optional<Redex> select_redex(const Tree& t) {
    std::optional<std::vector<int>> best;
    std::vector<int> path;
    deepest_branching(t, path, best);
    if (!best) return std::nullopt;
    return Redex{std::move(*best), 0, 1};
}

std::uint64_t step_ceiling(int total_edges) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t pow4 = 1;
    for (int k = 0; k < total_edges; ++k) {
        if (pow4 > (kMax >> 2)) {
            pow4 = kMax;
            break;
        }
        pow4 <<= 2;
    }
    // Wide corollas need up to E! - 1 steps, which overtakes 4^E at E = 9.
    std::uint64_t fact = 1;
    for (int k = 2; k <= total_edges; ++k) {
        if (fact > kMax / static_cast<std::uint64_t>(k)) {
            fact = kMax;
            break;
        }
        fact *= static_cast<std::uint64_t>(k);
    }
    return std::max(pow4, fact);
}

namespace {

void check_descent(const Metrics& before, const Metrics& after) {
    if (after.edges != before.edges)
        throw InternalError("rewrite step changed the edge count");
    const bool branch_gone = after.branches == before.branches - 1;
    const bool branch_shorter =
        after.branches == before.branches && after.branch_length == before.branch_length - 1;
    if (!branch_gone && !branch_shorter)
        throw InternalError("rewrite step violated the (N, D) descent");
}

} // namespace

ReduceResult reduce(const Forest& input) {
    ReduceResult res;
    res.trace.input = input;
    int total_edges = 0;
    for (const auto& [tree, coeff] : input.terms()) total_edges += edge_count(tree);
    const std::uint64_t ceiling = step_ceiling(total_edges);
    std::uint64_t steps = 0;

    int index = 0;
    for (const auto& [tree, coeff] : input.terms()) {
        std::vector<Tree> pending{tree};
        while (!pending.empty()) {
            Tree cur = std::move(pending.back());
            pending.pop_back();
            std::optional<Redex> redex = select_redex(cur);
            if (!redex) {
                res.output.add_tree(cur, coeff);
                continue;
            }
            if (++steps > ceiling)
                throw InternalError("step ceiling exceeded; the reduction did not converge");
            StepOutputs outs = rb_step(cur, redex->vertex, redex->i, redex->j);

            RewriteStep step;
            step.input_tree = index;
            step.vertex = std::move(redex->vertex);
            step.branch_i = redex->i;
            step.branch_j = redex->j;
            step.metrics_before = metrics(cur);
            step.metrics_first = metrics(outs.first);
            step.metrics_second = metrics(outs.second);
            check_descent(step.metrics_before, step.metrics_first);
            check_descent(step.metrics_before, step.metrics_second);
            step.before = std::move(cur);
            pending.push_back(outs.second);
            pending.push_back(outs.first);
            step.out_first = std::move(outs.first);
            step.out_second = std::move(outs.second);
            res.trace.steps.push_back(std::move(step));
        }
        ++index;
    }
    res.trace.output = res.output;
    return res;
}

Forest replay(const RewriteTrace& trace) {
    Forest out;
    std::size_t next = 0;
    int index = 0;
    for (const auto& [tree, coeff] : trace.input.terms()) {
        std::vector<Tree> pending{tree};
        while (!pending.empty()) {
            Tree cur = std::move(pending.back());
            pending.pop_back();
            if (next < trace.steps.size() && trace.steps[next].input_tree == index &&
                trace.steps[next].before == cur) {
                const RewriteStep& s = trace.steps[next++];
                StepOutputs outs = rb_step(cur, s.vertex, s.branch_i, s.branch_j);
                if (outs.first != s.out_first || outs.second != s.out_second)
                    throw InternalError("trace replay diverged from the recorded outputs");
                pending.push_back(outs.second);
                pending.push_back(outs.first);
            } else {
                if (select_redex(cur))
                    throw InternalError("trace replay reached a reducible tree with no recorded step");
                out.add_tree(cur, coeff);
            }
        }
        ++index;
    }
    if (next != trace.steps.size())
        throw InternalError("trace replay did not consume every recorded step");
    return out;
}

namespace {

Tree build_chain(const std::vector<Label>& labels, const std::vector<std::string>& edges) {
    Tree node = leaf(labels.back());
    for (int k = static_cast<int>(edges.size()) - 1; k >= 0; --k)
        node = Tree{labels[k], {Edge{edges[k], std::move(node)}}};
    return node;
}

} // namespace

Forest iterated_rule(const Label& a, const std::string& side_index, const Tree& f_subtree,
                     std::span<const std::pair<std::string, Label>> chain) {
    if (chain.empty())
        throw std::invalid_argument("iterated rule needs a chain of length >= 1");
    if (!f_subtree.children.empty())
        throw std::invalid_argument("the side branch must be a single vertex");
    if (!is_identifier(side_index))
        throw std::invalid_argument("not an identifier: '" + side_index + "'");

    const Label& f = f_subtree.root;
    const int m = static_cast<int>(chain.size());
    Forest out;

    // Side branch stays below the whole chain.
    {
        std::vector<Label> labels{Label::twist(chain[0].first) * a,
                                  Label::twist_inv(chain[0].first) * f};
        std::vector<std::string> edges{side_index};
        for (const auto& [idx, lab] : chain) {
            edges.push_back(idx);
            labels.push_back(lab);
        }
        out.add_tree(build_chain(labels, edges), 1);
    }
    // Side branch spliced between links i and i+1.
    for (int i = 1; i < m; ++i) {
        std::vector<Label> labels{Label::twist(side_index) * a};
        std::vector<std::string> edges;
        for (int k = 0; k < i - 1; ++k) {
            edges.push_back(chain[k].first);
            labels.push_back(chain[k].second);
        }
        edges.push_back(chain[i - 1].first);
        labels.push_back(Label::twist_inv(side_index) * chain[i - 1].second *
                         Label::twist(chain[i].first));
        edges.push_back(side_index);
        labels.push_back(Label::twist_inv(chain[i].first) * f);
        for (int k = i; k < m; ++k) {
            edges.push_back(chain[k].first);
            labels.push_back(chain[k].second);
        }
        out.add_tree(build_chain(labels, edges), 1);
    }
    // Side branch on top.
    {
        std::vector<Label> labels{Label::twist(side_index) * a};
        std::vector<std::string> edges;
        for (int k = 0; k + 1 < m; ++k) {
            edges.push_back(chain[k].first);
            labels.push_back(chain[k].second);
        }
        edges.push_back(chain[m - 1].first);
        labels.push_back(Label::twist_inv(side_index) * chain[m - 1].second);
        edges.push_back(side_index);
        labels.push_back(f);
        out.add_tree(build_chain(labels, edges), 1);
    }
    return out;
}

} // namespace volterra
