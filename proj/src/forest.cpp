#include "volterra/forest.hpp"

#include <utility>

namespace volterra {

Forest Forest::single(Tree t, int coeff) {
    Forest f;
    f.add_tree(t, coeff);
    return f;
}

void Forest::add_tree(const Tree& t, int coeff) {
    if (coeff == 0) return;
    Tree key = canonicalize(t);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Forest& Forest::operator+=(const Forest& other) {
    for (const auto& [tree, coeff] : other.terms_) {
        auto it = terms_.find(tree);
        if (it == terms_.end()) {
            terms_.emplace(tree, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Forest Forest::scaled(int c) const {
    Forest out;
    if (c == 0) return out;
    for (const auto& [tree, coeff] : terms_) out.terms_.emplace(tree, coeff * c);
    return out;
}

} // namespace volterra
