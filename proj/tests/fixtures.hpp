#pragma once

// Golden inputs and expected reduced forests for the worked reductions the
// suite checks symbolically, plus small builders shared across test binaries.

#include <string>
#include <vector>

#include "volterra/forest.hpp"
#include "volterra/tree.hpp"

namespace fixtures {

using volterra::Edge;
using volterra::Forest;
using volterra::Label;
using volterra::Tree;

inline Label fn(const std::string& s) { return Label::func(s); }
inline Label tw(const std::string& s) { return Label::twist(s); }
inline Label ti(const std::string& s) { return Label::twist_inv(s); }

inline Tree node(Label l, std::vector<Edge> children = {}) {
    return Tree{std::move(l), std::move(children)};
}

// labels[0] is the root; edges[k] connects labels[k] to labels[k+1].
inline Tree chain(const std::vector<Label>& labels, const std::vector<std::string>& edges) {
    Tree t = node(labels.back());
    for (int k = static_cast<int>(edges.size()) - 1; k >= 0; --k)
        t = node(labels[k], {Edge{edges[k], std::move(t)}});
    return t;
}

// --- a * P_alpha(f) * P_beta1(g1 * P_beta2(g2)): branch times a 2-chain ---

inline std::string branch_chain2_text() {
    return "a * P[alpha](f) * P[beta1](g1 * P[beta2](g2))";
}

inline Tree branch_chain2_input() {
    return node(fn("a"), {Edge{"alpha", node(fn("f"))},
                          Edge{"beta1", node(fn("g1"), {Edge{"beta2", node(fn("g2"))}})}});
}

inline Forest branch_chain2_reduced() {
    Forest f;
    f.add_tree(chain({tw("beta1") * fn("a"), ti("beta1") * fn("f"), fn("g1"), fn("g2")},
                     {"alpha", "beta1", "beta2"}),
               1);
    f.add_tree(chain({tw("alpha") * fn("a"), ti("alpha") * fn("g1") * tw("beta2"),
                      ti("beta2") * fn("f"), fn("g2")},
                     {"beta1", "alpha", "beta2"}),
               1);
    f.add_tree(chain({tw("alpha") * fn("a"), fn("g1"), ti("alpha") * fn("g2"), fn("f")},
                     {"beta1", "beta2", "alpha"}),
               1);
    return f;
}

// --- a * P_alpha(f) * P_beta1(g1 * P_beta2(g2 * P_beta3(g3))): 3-chain ---

inline std::string branch_chain3_text() {
    return "a * P[alpha](f) * P[beta1](g1 * P[beta2](g2 * P[beta3](g3)))";
}

inline Tree branch_chain3_input() {
    return node(
        fn("a"),
        {Edge{"alpha", node(fn("f"))},
         Edge{"beta1", node(fn("g1"), {Edge{"beta2", node(fn("g2"), {Edge{"beta3", node(fn("g3"))}})}})}});
}

inline Forest branch_chain3_reduced() {
    Forest f;
    f.add_tree(chain({tw("beta1") * fn("a"), ti("beta1") * fn("f"), fn("g1"), fn("g2"), fn("g3")},
                     {"alpha", "beta1", "beta2", "beta3"}),
               1);
    f.add_tree(chain({tw("alpha") * fn("a"), ti("alpha") * fn("g1") * tw("beta2"),
                      ti("beta2") * fn("f"), fn("g2"), fn("g3")},
                     {"beta1", "alpha", "beta2", "beta3"}),
               1);
    f.add_tree(chain({tw("alpha") * fn("a"), fn("g1"), ti("alpha") * fn("g2") * tw("beta3"),
                      ti("beta3") * fn("f"), fn("g3")},
                     {"beta1", "beta2", "alpha", "beta3"}),
               1);
    f.add_tree(chain({tw("alpha") * fn("a"), fn("g1"), fn("g2"), ti("alpha") * fn("g3"), fn("f")},
                     {"beta1", "beta2", "beta3", "alpha"}),
               1);
    return f;
}

// --- a * P_alpha(f) * P_beta(g) * P_gamma(h): the 3-branch corolla ---

inline std::string corolla3_text() {
    return "a * P[alpha](f) * P[beta](g) * P[gamma](h)";
}

inline Tree corolla3_input() {
    return node(fn("a"), {Edge{"alpha", node(fn("f"))}, Edge{"beta", node(fn("g"))},
                          Edge{"gamma", node(fn("h"))}});
}

inline Forest corolla3_reduced() {
    Forest f;
    f.add_tree(chain({tw("alpha") * tw("beta") * fn("a"), ti("alpha") * fn("h"),
                      ti("beta") * fn("f"), fn("g")},
                     {"gamma", "alpha", "beta"}),
               1);
    f.add_tree(chain({tw("gamma") * tw("beta") * fn("a"), ti("gamma") * fn("f"),
                      ti("beta") * fn("h"), fn("g")},
                     {"alpha", "gamma", "beta"}),
               1);
    f.add_tree(chain({tw("gamma") * tw("beta") * fn("a"), ti("beta") * fn("f"),
                      ti("gamma") * fn("g"), fn("h")},
                     {"alpha", "beta", "gamma"}),
               1);
    f.add_tree(chain({tw("beta") * tw("alpha") * fn("a"), ti("beta") * fn("h"),
                      ti("alpha") * fn("g"), fn("f")},
                     {"gamma", "beta", "alpha"}),
               1);
    f.add_tree(chain({tw("gamma") * tw("alpha") * fn("a"), ti("gamma") * fn("g"),
                      ti("alpha") * fn("h"), fn("f")},
                     {"beta", "gamma", "alpha"}),
               1);
    f.add_tree(chain({tw("gamma") * tw("alpha") * fn("a"), ti("alpha") * fn("g"),
                      ti("gamma") * fn("f"), fn("h")},
                     {"beta", "alpha", "gamma"}),
               1);
    return f;
}

// --- f1 * P_alpha(f2 * P_gamma(f4) * P_delta(f5)) * P_beta(f3) ---

inline std::string nested_branch_text() {
    return "f1 * P[alpha](f2 * P[gamma](f4) * P[delta](f5)) * P[beta](f3)";
}

inline Tree nested_branch_input() {
    return node(fn("f1"),
                {Edge{"alpha", node(fn("f2"), {Edge{"gamma", node(fn("f4"))},
                                               Edge{"delta", node(fn("f5"))}})},
                 Edge{"beta", node(fn("f3"))}});
}

inline Forest nested_branch_reduced() {
    Forest f;
    f.add_tree(chain({tw("alpha") * fn("f1"), ti("alpha") * fn("f3"), tw("delta") * fn("f2"),
                      ti("delta") * fn("f4"), fn("f5")},
                     {"beta", "alpha", "gamma", "delta"}),
               1);
    f.add_tree(chain({tw("beta") * fn("f1"), ti("beta") * tw("delta") * fn("f2") * tw("gamma"),
                      ti("gamma") * fn("f3"), ti("delta") * fn("f4"), fn("f5")},
                     {"alpha", "beta", "gamma", "delta"}),
               1);
    f.add_tree(chain({tw("beta") * fn("f1"), tw("delta") * fn("f2"), ti("beta") * fn("f4"),
                      ti("delta") * fn("f3"), fn("f5")},
                     {"alpha", "gamma", "beta", "delta"}),
               1);
    f.add_tree(chain({tw("beta") * fn("f1"), tw("delta") * fn("f2"), ti("delta") * fn("f4"),
                      ti("beta") * fn("f5"), fn("f3")},
                     {"alpha", "gamma", "delta", "beta"}),
               1);
    f.add_tree(chain({tw("alpha") * fn("f1"), ti("alpha") * fn("f3"), tw("gamma") * fn("f2"),
                      ti("gamma") * fn("f5"), fn("f4")},
                     {"beta", "alpha", "delta", "gamma"}),
               1);
    f.add_tree(chain({tw("beta") * fn("f1"), ti("beta") * tw("gamma") * fn("f2") * tw("delta"),
                      ti("delta") * fn("f3"), ti("gamma") * fn("f5"), fn("f4")},
                     {"alpha", "beta", "delta", "gamma"}),
               1);
    f.add_tree(chain({tw("beta") * fn("f1"), tw("gamma") * fn("f2"), ti("beta") * fn("f5"),
                      ti("gamma") * fn("f3"), fn("f4")},
                     {"alpha", "delta", "beta", "gamma"}),
               1);
    f.add_tree(chain({tw("beta") * fn("f1"), tw("gamma") * fn("f2"), ti("gamma") * fn("f5"),
                      ti("beta") * fn("f4"), fn("f3")},
                     {"alpha", "delta", "gamma", "beta"}),
               1);
    return f;
}

// --- a * P_alpha(f) * P_beta(g): the base two-branch product ---

inline Tree base_product_input() {
    return node(fn("a"), {Edge{"alpha", node(fn("f"))}, Edge{"beta", node(fn("g"))}});
}

inline Forest base_product_reduced() {
    Forest f;
    f.add_tree(chain({tw("beta") * fn("a"), ti("beta") * fn("f"), fn("g")}, {"alpha", "beta"}), 1);
    f.add_tree(chain({tw("alpha") * fn("a"), ti("alpha") * fn("g"), fn("f")}, {"beta", "alpha"}), 1);
    return f;
}

} // namespace fixtures
