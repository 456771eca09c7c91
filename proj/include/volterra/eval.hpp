#pragma once

#include <span>
#include <vector>

#include "volterra/bindings.hpp"
#include "volterra/forest.hpp"

namespace volterra {

// |k| below this at a required point counts as a twist singularity.
inline constexpr double kTwistSingularityEps = 1e-12;

// Product over the label's atoms: bound function values and twist factors
// k(x)/k(0). Raises EvalError for unbound names and twist singularities.
double eval_label(const Label& l, const Bindings& b, double x);

// Reference evaluator: every integral is composite Simpson with n
// subintervals of its own range, applied recursively. Cost grows as
// (n+1)^depth, so this is for shallow trees; verification uses the grid
// evaluators below. n must be even and >= 2.
double eval_tree(const Tree& t, const Bindings& b, double x, int n);

// Fast evaluator: one shared n-subinterval grid on [0, x]; inner integrals
// accumulate by cumulative composite Simpson. O(edges * n), order 4.
double eval_tree_grid(const Tree& t, const Bindings& b, double x, int n);

// Grid evaluator at n and 2n combined by one Richardson extrapolation step
// (order 6). This is the per-tree evaluator behind eval_forest and
// verify_equivalence.
double eval_tree_refined(const Tree& t, const Bindings& b, double x, int n);

double eval_forest(const Forest& f, const Bindings& b, double x, int n);

struct VerifySample {
    double x = 0;
    double lhs = 0;
    double rhs = 0;
    double abs_dev = 0;
    double rel_dev = 0;
};

struct VerifyReport {
    std::vector<VerifySample> samples;
    double max_rel_dev = 0;
    double tol = 0;
    bool passed = false;
};

// Evaluates both forests at every sample point and compares. The relative
// deviation falls back to the absolute one when both values are below tol;
// the report passes iff the maximum deviation is within tol.
VerifyReport verify_equivalence(const Forest& f_in, const Forest& f_out, const Bindings& b,
                                std::span<const double> xs, int n, double tol);

} // namespace volterra
