#include "volterra/print.hpp"

#include <cstdlib>
#include <string>

namespace volterra {

namespace {

std::string operator_term(const Tree& t) {
    std::string out;
    auto append = [&out](const std::string& part) {
        if (!out.empty()) out += " * ";
        out += part;
    };
    if (!t.root.is_one()) append(t.root.text());
    for (const Edge& e : t.children) append("P[" + e.index + "](" + operator_term(e.child) + ")");
    return out.empty() ? "1" : out;
}

std::string integral_term(const Tree& t) {
    std::string out;
    if (!t.root.is_one() || t.children.empty()) out = t.root.text();
    for (const Edge& e : t.children) {
        if (!out.empty()) out += ' ';
        out += "∫_" + e.index + "(" + integral_term(e.child) + ")";
    }
    return out;
}

std::string joined_terms(const Forest& f, std::string (*term)(const Tree&)) {
    if (f.empty()) return "0 * 1"; // the grammar has no zero literal
    std::string out;
    bool first = true;
    for (const auto& [tree, coeff] : f.terms()) {
        if (first) {
            if (coeff != 1) out += std::to_string(coeff) + " * ";
            out += term(tree);
            first = false;
            continue;
        }
        out += coeff < 0 ? " - " : " + ";
        const long long mag = std::llabs(static_cast<long long>(coeff));
        if (mag != 1) out += std::to_string(mag) + " * ";
        out += term(tree);
    }
    return out;
}

} // namespace

std::string print_operator(const Forest& f) {
    return joined_terms(f, operator_term);
}

std::string print_integral(const Forest& f) {
    return joined_terms(f, integral_term);
}

namespace {

void dot_nodes(const Tree& t, int& next, std::string& body) {
    const int id = next++;
    body += "  n" + std::to_string(id) + " [label=\"" + t.root.text() + "\"";
    if (id == 0) body += ", shape=doublecircle";
    body += "];\n";
    for (const Edge& e : t.children) {
        const int child_id = next;
        dot_nodes(e.child, next, body);
        body += "  n" + std::to_string(id) + " -> n" + std::to_string(child_id) + " [label=\"" +
                e.index + "\"];\n";
    }
}

} // namespace

std::string render_dot(const Forest& f) {
    std::string out;
    int ti = 0;
    for (const auto& [tree, coeff] : f.terms()) {
        out += "digraph tree_" + std::to_string(ti) + " {\n";
        out += "  rankdir=\"BT\";\n"; // roots at the bottom
        if (coeff != 1) out += "  label=\"coefficient " + std::to_string(coeff) + "\";\n";
        int next = 0;
        dot_nodes(tree, next, out);
        out += "}\n";
        ++ti;
    }
    return out;
}

namespace {

std::string path_text(std::span<const int> path) {
    if (path.empty()) return "-";
    std::string out;
    for (int p : path) {
        if (!out.empty()) out += '.';
        out += std::to_string(p);
    }
    return out;
}

} // namespace

std::string format_trace(const RewriteTrace& trace) {
    std::string out;
    int k = 0;
    for (const RewriteStep& s : trace.steps) {
        out += "step=" + std::to_string(k++);
        out += " tree=" + std::to_string(s.input_tree);
        out += " vertex=" + path_text(s.vertex);
        out += " pair=" + std::to_string(s.branch_i) + "," + std::to_string(s.branch_j);
        out += " E=" + std::to_string(s.metrics_before.edges);
        out += " N_before=" + std::to_string(s.metrics_before.branches);
        out += " D_before=" + std::to_string(s.metrics_before.branch_length);
        out += " N_after=" + std::to_string(s.metrics_first.branches) + "," +
               std::to_string(s.metrics_second.branches);
        out += " D_after=" + std::to_string(s.metrics_first.branch_length) + "," +
               std::to_string(s.metrics_second.branch_length);
        out += '\n';
    }
    return out;
}

std::string format_metrics(const Metrics& m) {
    return "E=" + std::to_string(m.edges) + " N=" + std::to_string(m.branches) +
           " D=" + std::to_string(m.branch_length);
}

} // namespace volterra
