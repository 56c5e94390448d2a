#include <gtest/gtest.h>

#include <set>

#include "ecirr/graph.hpp"
#include "support.hpp"

namespace ecirr {
namespace {

using testing::code_of;

TEST(Graph, ExampleStructure) {
    const auto ex = testing::load_example83();
    const FunctionalGraph g = build_graph(ex.map, ex.curve.ctx());
    ASSERT_EQ(g.node_count(), 84u);
    const u64 inf = g.infinity_node();
    EXPECT_EQ(g.succ(inf), inf);
    EXPECT_TRUE(g.on_cycle(inf));
    EXPECT_TRUE(g.point_of(inf).is_infinity());

    u64 total = 0;
    for (const auto& c : g.components()) {
        total += c.size;
        for (std::size_t i = 0; i < c.cycle.size(); ++i) {
            EXPECT_EQ(g.succ(c.cycle[i]), c.cycle[(i + 1) % c.cycle.size()]);
        }
    }
    EXPECT_EQ(total, g.node_count());

    u64 in_total = 0;
    for (u64 v = 0; v < g.node_count(); ++v) {
        EXPECT_EQ(g.height(v) == 0, g.on_cycle(v));
        EXPECT_LE(g.in_degree(v), 17u);
        in_total += g.in_degree(v);
        if (!g.on_cycle(v)) EXPECT_EQ(g.height(v), g.height(g.succ(v)) + 1);
        EXPECT_TRUE(g.on_cycle(g.root(v)));
        EXPECT_EQ(g.component_of(v), g.component_of(g.succ(v)));
        auto [b, e] = g.preds(v);
        for (const u64* it = b; it != e; ++it) EXPECT_EQ(g.succ(*it), v);
        EXPECT_EQ(g.node_of(g.point_of(v)), v);
    }
    EXPECT_EQ(in_total, g.node_count());
}

TEST(Graph, SuccessorsMatchMapEval) {
    const auto ex = testing::load_example83();
    const FunctionalGraph g = build_graph(ex.map, ex.curve.ctx());
    for (u64 v = 0; v < g.node_count(); ++v) {
        EXPECT_EQ(g.point_of(g.succ(v)), map_eval(ex.map, g.point_of(v)));
    }
}

TEST(Graph, TrajectoryMatchesIteration) {
    const auto ex = testing::load_example83();
    const FieldCtx& k = ex.curve.ctx();
    const FunctionalGraph g = build_graph(ex.map, k);
    for (u64 x = 0; x < k.order(); ++x) {
        const ProjPoint start = ProjPoint::affine(Elem{x});
        const auto [tail, cycle] = trajectory(g, start);
        ASSERT_FALSE(cycle.empty());
        EXPECT_EQ(tail.size(), g.height(g.node_of(start)));
        ProjPoint pt = start;
        std::vector<ProjPoint> walk;
        for (std::size_t i = 0; i < tail.size() + cycle.size(); ++i) {
            walk.push_back(pt);
            pt = map_eval(ex.map, pt);
        }
        EXPECT_EQ(pt, cycle.front());
        for (std::size_t i = 0; i < tail.size(); ++i) EXPECT_EQ(walk[i], tail[i]);
        for (std::size_t i = 0; i < cycle.size(); ++i) EXPECT_EQ(walk[tail.size() + i], cycle[i]);
        EXPECT_EQ(map_iterate(ex.map, cycle.size(), cycle.front()), cycle.front());
    }
}

TEST(Graph, Errors) {
    const auto ex = testing::load_example83();
    const FieldCtx& k = ex.curve.ctx();
    const FunctionalGraph g = build_graph(ex.map, k);
    EXPECT_EQ(code_of([&] { g.node_of(ProjPoint::affine(Elem{83})); }), ErrorCode::kNodeNotFound);
    EXPECT_EQ(code_of([&] { trajectory(g, ProjPoint::affine(Elem{200})); }), ErrorCode::kNodeNotFound);
    EXPECT_EQ(code_of([&] { tree_profiles(g, 2); }), ErrorCode::kSubfieldMismatch);
    EXPECT_EQ(code_of([&] { build_graph(ex.map, k, 50); }), ErrorCode::kFieldTooLarge);
    const FieldCtx other = FieldCtx::prime(89);
    EXPECT_NE(code_of([&] { build_graph(ex.map, other); }), ErrorCode::kOk);
}

TEST(Graph, LiftedMapAgreesOnPrimeField) {
    const auto fx = testing::load_fixture("D19_l5_p43_d1");
    const FieldCtx base = fx.curve.ctx();
    const FieldCtx ext = standard_extension(base.p(), 2);
    const FunctionalGraph small = build_graph(fx.map, base);
    const FunctionalGraph big = build_graph(fx.map, ext);
    EXPECT_EQ(big.node_count(), ext.order() + 1);
    for (u64 x = 0; x < base.order(); ++x) {
        const ProjPoint img = small.point_of(small.succ(x));
        const ProjPoint lifted = big.point_of(big.succ(big.node_of(ProjPoint::affine(ext.from_int(static_cast<i64>(x))))));
        if (img.is_infinity()) {
            EXPECT_TRUE(lifted.is_infinity());
        } else {
            ASSERT_FALSE(lifted.is_infinity());
            EXPECT_EQ(lifted.x(), ext.from_int(static_cast<i64>(img.x().v)));
        }
    }
}

TEST(Graph, FixtureTreeDepths) {
    for (const auto& name : testing::fixture_names()) {
        SCOPED_TRACE(name);
        const auto fx = testing::load_fixture(name);
        const FieldCtx k = standard_extension(fx.curve.ctx().p(), 2 * fx.d);
        const FunctionalGraph g = build_graph(fx.map, k);
        const auto profiles = tree_profiles(g, fx.d);
        ASSERT_FALSE(profiles.empty());
        for (const auto& t : profiles) EXPECT_TRUE(t.in_subfield);
        const DepthSummary s = summarize(profiles);
        EXPECT_TRUE(s.uniform_depth);
        EXPECT_TRUE(s.uniform_leaves);
        EXPECT_EQ(s.depth, fx.k0);
        const auto [k_pi, k_conj] = k0_candidates(fx.pi, fx.alpha, fx.d);
        EXPECT_TRUE(s.depth == k_pi || s.depth == k_conj);
        std::set<u64> roots;
        for (const auto& t : profiles) roots.insert(t.root_node);
        EXPECT_EQ(roots.size(), profiles.size());
    }
}

TEST(Graph, Summary) {
    DepthSummary empty = summarize({});
    EXPECT_EQ(empty.trees, 0u);
    TreeProfile a;
    a.depth = 2;
    a.leaf_heights = {{2, 3}};
    TreeProfile b = a;
    b.depth = 3;
    b.leaf_heights = {{1, 1}, {3, 1}};
    const DepthSummary s = summarize({a, b});
    EXPECT_EQ(s.trees, 2u);
    EXPECT_FALSE(s.uniform_depth);
    EXPECT_FALSE(s.uniform_leaves);
    EXPECT_EQ(s.min_depth, 2u);
    EXPECT_EQ(s.max_depth, 3u);
}

TEST(Graph, Dot) {
    const auto ex = testing::load_example83();
    const FunctionalGraph g = build_graph(ex.map, ex.curve.ctx());
    const std::string dot = to_dot(g);
    EXPECT_EQ(dot.rfind("digraph", 0), 0u);
    EXPECT_NE(dot.find("inf"), std::string::npos);
    u64 edges = 0;
    for (std::size_t pos = dot.find(" -> "); pos != std::string::npos; pos = dot.find(" -> ", pos + 1)) ++edges;
    EXPECT_EQ(edges, g.node_count());
}

}  // namespace
}  // namespace ecirr
