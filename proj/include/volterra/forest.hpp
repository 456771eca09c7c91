#pragma once

#include <cstddef>
#include <map>

#include "volterra/tree.hpp"

namespace volterra {

struct TreeOrder {
    bool operator()(const Tree& a, const Tree& b) const { return compare(a, b) < 0; }
};

// Integer-weighted formal sum of canonical trees: the value an integral
// polynomial parses to. No zero coefficients, no duplicate trees; iteration
// follows the canonical tree order.
class Forest {
public:
    Forest() = default;

    static Forest single(Tree t, int coeff = 1);

    // Canonicalizes t, merges coefficients, drops zero entries.
    void add_tree(const Tree& t, int coeff);

    Forest& operator+=(const Forest& other);
    friend Forest operator+(Forest a, const Forest& b) {
        a += b;
        return a;
    }

    Forest scaled(int c) const;

    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::map<Tree, int, TreeOrder>& terms() const noexcept { return terms_; }

    friend bool operator==(const Forest& a, const Forest& b) { return a.terms_ == b.terms_; }

private:
    std::map<Tree, int, TreeOrder> terms_;
};

} // namespace volterra
