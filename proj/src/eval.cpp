#include "volterra/eval.hpp"

#include <cmath>
#include <stdexcept>

#include "volterra/errors.hpp"

namespace volterra {

namespace {

const KernelBinding& kernel_or_throw(const Bindings& b, const std::string& index) {
    auto it = b.kernels.find(index);
    if (it == b.kernels.end()) throw EvalError("no kernel bound for index '" + index + "'");
    return it->second;
}

// k(x)/k(0), rejecting bindings that vanish where the twist needs them.
double twist_value(const KernelBinding& kb, double x) {
    const double k0 = kb.k(0.0);
    const double kx = kb.k(x);
    if (std::abs(k0) < kTwistSingularityEps || std::abs(kx) < kTwistSingularityEps)
        throw EvalError("twist singularity: kernel '" + kb.index +
                        "' vanishes at a point required by a twist");
    return kx / k0;
}

void require_even(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("subinterval count must be even and >= 2");
}

} // namespace

double eval_label(const Label& l, const Bindings& b, double x) {
    double v = 1.0;
    for (const Atom& a : l.atoms()) {
        switch (a.kind) {
        case AtomKind::Func: {
            auto it = b.functions.find(a.name);
            if (it == b.functions.end())
                throw EvalError("no function bound for '" + a.name + "'");
            v *= it->second(x);
            break;
        }
        case AtomKind::Twist:
            v *= twist_value(kernel_or_throw(b, a.name), x);
            break;
        case AtomKind::TwistInv:
            v *= 1.0 / twist_value(kernel_or_throw(b, a.name), x);
            break;
        }
    }
    return v;
}

namespace {

double eval_tree_rec(const Tree& t, const Bindings& b, double x, int n) {
    double v = eval_label(t.root, b, x);
    for (const Edge& e : t.children) {
        const KernelBinding& kb = kernel_or_throw(b, e.index);
        const double h = x / n;
        double acc = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double ti = x * i / n;
            const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
            acc += w * kb.h(ti) * eval_tree_rec(e.child, b, ti, n);
        }
        v *= kb.k(x) * acc * h / 3.0;
    }
    return v;
}

} // namespace

double eval_tree(const Tree& t, const Bindings& b, double x, int n) {
    require_even(n);
    return eval_tree_rec(t, b, x, n);
}

namespace {

// Running integral over the shared grid: composite Simpson on even prefixes,
// a three-point end correction on odd ones. Order 4 at every node.
std::vector<double> cumulative_simpson(const std::vector<double>& y, double h) {
    const int n = static_cast<int>(y.size()) - 1;
    std::vector<double> f(n + 1, 0.0);
    for (int i = 2; i <= n; i += 2)
        f[i] = f[i - 2] + h / 3.0 * (y[i - 2] + 4.0 * y[i - 1] + y[i]);
    for (int i = 1; i < n; i += 2)
        f[i] = f[i - 1] + h / 12.0 * (5.0 * y[i - 1] + 8.0 * y[i] - y[i + 1]);
    return f;
}

std::vector<double> node_values(const Tree& t, const Bindings& b, const std::vector<double>& ts,
                                double h) {
    std::vector<double> v(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) v[i] = eval_label(t.root, b, ts[i]);
    for (const Edge& e : t.children) {
        const KernelBinding& kb = kernel_or_throw(b, e.index);
        std::vector<double> y = node_values(e.child, b, ts, h);
        for (std::size_t i = 0; i < ts.size(); ++i) y[i] *= kb.h(ts[i]);
        const std::vector<double> integral = cumulative_simpson(y, h);
        for (std::size_t i = 0; i < ts.size(); ++i) v[i] *= kb.k(ts[i]) * integral[i];
    }
    return v;
}

} // namespace

double eval_tree_grid(const Tree& t, const Bindings& b, double x, int n) {
    require_even(n);
    std::vector<double> ts(n + 1);
    for (int i = 0; i <= n; ++i) ts[i] = x * i / n;
    return node_values(t, b, ts, x / n).back();
}

double eval_tree_refined(const Tree& t, const Bindings& b, double x, int n) {
    return (16.0 * eval_tree_grid(t, b, x, 2 * n) - eval_tree_grid(t, b, x, n)) / 15.0;
}

double eval_forest(const Forest& f, const Bindings& b, double x, int n) {
    double v = 0.0;
    for (const auto& [tree, coeff] : f.terms()) v += coeff * eval_tree_refined(tree, b, x, n);
    return v;
}

VerifyReport verify_equivalence(const Forest& f_in, const Forest& f_out, const Bindings& b,
                                std::span<const double> xs, int n, double tol) {
    VerifyReport rep;
    rep.tol = tol;
    for (double x : xs) {
        VerifySample s;
        s.x = x;
        s.lhs = eval_forest(f_in, b, x, n);
        s.rhs = eval_forest(f_out, b, x, n);
        s.abs_dev = std::abs(s.lhs - s.rhs);
        const double denom = std::max(std::abs(s.lhs), std::abs(s.rhs));
        s.rel_dev = denom < tol ? s.abs_dev : s.abs_dev / denom;
        rep.max_rel_dev = std::max(rep.max_rel_dev, s.rel_dev);
        rep.samples.push_back(s);
    }
    rep.passed = rep.max_rel_dev <= tol;
    return rep;
}

} // namespace volterra
