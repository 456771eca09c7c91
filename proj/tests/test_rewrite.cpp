#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <utility>
#include <vector>

#include "volterra/errors.hpp"
#include "volterra/rewrite.hpp"

#include "fixtures.hpp"
#include "generators.hpp"

using namespace volterra;
using fixtures::chain;
using fixtures::fn;
using fixtures::node;
using fixtures::ti;
using fixtures::tw;

namespace {

// Did the (N, D) pair step down the way a single rewrite must?
void check_step_descent(const Metrics& before, const Metrics& after) {
    CHECK(after.edges == before.edges);
    const bool branch_gone = after.branches == before.branches - 1;
    const bool branch_shorter =
        after.branches == before.branches && after.branch_length == before.branch_length - 1;
    CHECK((branch_gone || branch_shorter));
}

} // namespace

TEST_CASE("rb_step on the base two-branch product") {
    const StepOutputs outs = rb_step(fixtures::base_product_input(), std::vector<int>{}, 0, 1);
    CHECK(outs.first ==
          chain({tw("beta") * fn("a"), ti("beta") * fn("f"), fn("g")}, {"alpha", "beta"}));
    CHECK(outs.second ==
          chain({tw("alpha") * fn("a"), ti("alpha") * fn("g"), fn("f")}, {"beta", "alpha"}));
}

TEST_CASE("rb_step first iteration of the branch-times-2-chain input") {
    const StepOutputs outs = rb_step(fixtures::branch_chain2_input(), std::vector<int>{}, 0, 1);
    CHECK(outs.first == chain({tw("beta1") * fn("a"), ti("beta1") * fn("f"), fn("g1"), fn("g2")},
                              {"alpha", "beta1", "beta2"}));
    CHECK(outs.second ==
          canonicalize(node(tw("alpha") * fn("a"),
                            {Edge{"beta1", node(ti("alpha") * fn("g1"),
                                                {Edge{"alpha", node(fn("f"))},
                                                 Edge{"beta2", node(fn("g2"))}})}})));
}

TEST_CASE("rb_step deep inside a larger tree leaves the rest alone") {
    // a[alpha -> b[delta -> e, gamma -> d[lambda -> g], sigma -> f], beta -> c]
    const Tree t = canonicalize(node(
        fn("a"),
        {Edge{"alpha", node(fn("b"), {Edge{"gamma", node(fn("d"), {Edge{"lambda", node(fn("g"))}})},
                                      Edge{"delta", node(fn("e"))},
                                      Edge{"sigma", node(fn("f"))}})},
         Edge{"beta", node(fn("c"))}}));
    // canonical child order below b: delta < gamma < sigma
    const StepOutputs outs = rb_step(t, std::vector<int>{0}, 1, 0);

    const Tree expected_first = canonicalize(node(
        fn("a"),
        {Edge{"alpha",
              node(tw("delta") * fn("b"),
                   {Edge{"gamma", node(ti("delta") * fn("d"),
                                       {Edge{"lambda", node(fn("g"))}, Edge{"delta", node(fn("e"))}})},
                    Edge{"sigma", node(fn("f"))}})},
         Edge{"beta", node(fn("c"))}}));
    const Tree expected_second = canonicalize(node(
        fn("a"),
        {Edge{"alpha",
              node(tw("gamma") * fn("b"),
                   {Edge{"delta",
                         node(ti("gamma") * fn("e"),
                              {Edge{"gamma", node(fn("d"), {Edge{"lambda", node(fn("g"))}})}})},
                    Edge{"sigma", node(fn("f"))}})},
         Edge{"beta", node(fn("c"))}}));
    CHECK(outs.first == expected_first);
    CHECK(outs.second == expected_second);
}

TEST_CASE("rb_step error paths") {
    const Tree t = fixtures::branch_chain2_input();
    CHECK_THROWS_AS(rb_step(t, std::vector<int>{7}, 0, 1), StepError);
    CHECK_THROWS_AS(rb_step(t, std::vector<int>{1}, 0, 1), StepError); // g1 has one child
    CHECK_THROWS_AS(rb_step(t, std::vector<int>{}, 1, 1), StepError);
    CHECK_THROWS_AS(rb_step(t, std::vector<int>{}, 0, 5), StepError);

    try {
        rb_step(t, std::vector<int>{1}, 0, 1);
        FAIL("expected StepError");
    } catch (const StepError& e) {
        CHECK(e.code() == StepError::Code::not_branching);
    }
}

TEST_CASE("select_redex") {
    CHECK(!select_redex(chain({fn("a"), fn("b"), fn("c")}, {"alpha", "beta"})).has_value());
    CHECK(!select_redex(leaf(fn("f"))).has_value());

    const auto corolla = select_redex(fixtures::corolla3_input());
    REQUIRE(corolla.has_value());
    CHECK(corolla->vertex.empty());
    CHECK(corolla->i == 0);
    CHECK(corolla->j == 1);

    // the deeper branching point wins over the root
    const auto nested = select_redex(fixtures::nested_branch_input());
    REQUIRE(nested.has_value());
    CHECK(nested->vertex == std::vector<int>{0});
}

TEST_CASE("reduce golden: branch times 2-chain") {
    const ReduceResult r = reduce(Forest::single(fixtures::branch_chain2_input()));
    CHECK(r.output == fixtures::branch_chain2_reduced());
    CHECK(r.trace.steps.size() == 2);
}

TEST_CASE("reduce golden: branch times 3-chain") {
    const ReduceResult r = reduce(Forest::single(fixtures::branch_chain3_input()));
    CHECK(r.output == fixtures::branch_chain3_reduced());
}

TEST_CASE("reduce golden: 3-branch corolla") {
    const ReduceResult r = reduce(Forest::single(fixtures::corolla3_input()));
    REQUIRE(r.output.size() == 6);
    CHECK(r.output == fixtures::corolla3_reduced());
}

TEST_CASE("reduce golden: nested double branch") {
    const ReduceResult r = reduce(Forest::single(fixtures::nested_branch_input()));
    REQUIRE(r.output.size() == 8);
    CHECK(r.output == fixtures::nested_branch_reduced());
}

TEST_CASE("reduce is the identity on branch-free forests") {
    Forest f;
    f.add_tree(chain({fn("a"), fn("b")}, {"alpha"}), 2);
    f.add_tree(leaf(fn("g")), -1);
    const ReduceResult r = reduce(f);
    CHECK(r.output == f);
    CHECK(r.trace.steps.empty());
}

TEST_CASE("reduce carries coefficients through") {
    Forest f;
    f.add_tree(fixtures::base_product_input(), -3);
    const ReduceResult r = reduce(f);
    CHECK(r.output == fixtures::base_product_reduced().scaled(-3));
}

TEST_CASE("every reduce output is branch-free with conserved edges") {
    testgen::Gen gen(21);
    for (int i = 0; i < 60; ++i) {
        const Forest f = gen.random_forest(7, 2, true, true);
        const ReduceResult r = reduce(f);
        int max_in = 0, max_out = 0;
        for (const auto& [tree, c] : f.terms()) max_in = std::max(max_in, edge_count(tree));
        for (const auto& [tree, c] : r.output.terms()) {
            CHECK(is_branch_free(tree));
            max_out = std::max(max_out, edge_count(tree));
        }
        if (!r.output.empty()) CHECK(max_out == max_in);
    }
}

TEST_CASE("step metrics recompute from the recorded trees") {
    testgen::Gen gen(22);
    for (int i = 0; i < 40; ++i) {
        const Forest f = gen.random_forest(7, 2, true, false);
        const ReduceResult r = reduce(f);
        for (const RewriteStep& s : r.trace.steps) {
            CHECK(metrics(s.before) == s.metrics_before);
            CHECK(metrics(s.out_first) == s.metrics_first);
            CHECK(metrics(s.out_second) == s.metrics_second);
            check_step_descent(s.metrics_before, s.metrics_first);
            check_step_descent(s.metrics_before, s.metrics_second);
        }
    }
}

TEST_CASE("trace replays to the recorded output") {
    testgen::Gen gen(23);
    for (int i = 0; i < 40; ++i) {
        const Forest f = gen.random_forest(7, 2, true, true);
        const ReduceResult r = reduce(f);
        CHECK(replay(r.trace) == r.output);
    }
    const ReduceResult golden = reduce(Forest::single(fixtures::nested_branch_input()));
    CHECK(replay(golden.trace) == golden.output);
}

TEST_CASE("step ceiling") {
    CHECK(step_ceiling(0) == 1);
    CHECK(step_ceiling(8) == 65536);              // 4^8 still dominates
    CHECK(step_ceiling(9) == 362880);             // 9! overtakes 4^9
    CHECK(step_ceiling(15) == 1307674368000ULL);  // 15!
    CHECK(step_ceiling(60) == step_ceiling(61));  // saturated
}

TEST_CASE("iterated rule base case matches the two-chain identity") {
    const std::vector<std::pair<std::string, Label>> links{{"beta", fn("g")}};
    const Forest f = iterated_rule(fn("a"), "alpha", leaf(fn("f")), links);
    CHECK(f == fixtures::base_product_reduced());
}

TEST_CASE("iterated rule reproduces the chain goldens") {
    {
        const std::vector<std::pair<std::string, Label>> links{{"beta1", fn("g1")},
                                                               {"beta2", fn("g2")}};
        CHECK(iterated_rule(fn("a"), "alpha", leaf(fn("f")), links) ==
              fixtures::branch_chain2_reduced());
    }
    {
        const std::vector<std::pair<std::string, Label>> links{
            {"beta1", fn("g1")}, {"beta2", fn("g2")}, {"beta3", fn("g3")}};
        CHECK(iterated_rule(fn("a"), "alpha", leaf(fn("f")), links) ==
              fixtures::branch_chain3_reduced());
    }
}

TEST_CASE("iterated rule equals the generic reduction for m = 1..6") {
    for (int m = 1; m <= 6; ++m) {
        std::vector<std::pair<std::string, Label>> links;
        Tree g_chain = leaf(fn("g" + std::to_string(m)));
        for (int k = m; k >= 1; --k)
            links.emplace_back("beta" + std::to_string(k), fn("g" + std::to_string(k)));
        std::reverse(links.begin(), links.end());
        for (int k = m - 1; k >= 1; --k)
            g_chain = node(fn("g" + std::to_string(k)),
                           {Edge{"beta" + std::to_string(k + 1), std::move(g_chain)}});
        const Tree input =
            node(fn("a"), {Edge{"alpha", leaf(fn("f"))}, Edge{"beta1", std::move(g_chain)}});
        CHECK(iterated_rule(fn("a"), "alpha", leaf(fn("f")), links) ==
              reduce(Forest::single(input)).output);
    }
}

TEST_CASE("iterated rule rejects bad arguments") {
    const std::vector<std::pair<std::string, Label>> empty;
    CHECK_THROWS_AS(iterated_rule(fn("a"), "alpha", leaf(fn("f")), empty), std::invalid_argument);
    const std::vector<std::pair<std::string, Label>> links{{"beta", fn("g")}};
    CHECK_THROWS_AS(
        iterated_rule(fn("a"), "alpha", chain({fn("f"), fn("g")}, {"omega"}), links),
        std::invalid_argument);
}

TEST_CASE("reduce merges equal output trees by summing coefficients") {
    // symmetric product: both outputs of the single step coincide
    const Tree t = node(Label{}, {Edge{"omega", leaf(Label{})}, Edge{"omega", leaf(Label{})}});
    const ReduceResult r = reduce(Forest::single(t));
    REQUIRE(r.output.size() == 1);
    CHECK(r.output.terms().begin()->second == 2);
    CHECK(r.output.terms().begin()->first ==
          chain({tw("omega"), ti("omega"), Label{}}, {"omega", "omega"}));
}
