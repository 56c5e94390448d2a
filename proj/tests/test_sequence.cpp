#include <gtest/gtest.h>

#include "ecirr/sequence.hpp"
#include "support.hpp"

namespace ecirr {
namespace {

using testing::code_of;

SequenceParams example_params(const testing::Example83& ex) {
    SequenceParams params(ex.map, ex.d);
    params.k0 = 1;
    return params;
}

std::vector<int> degrees(const SequenceRun& run) {
    std::vector<int> out;
    for (const Poly& f : run.polys) out.push_back(f.degree());
    return out;
}

TEST(Selection, Parse) {
    EXPECT_EQ(Selection::parse("smallest-degree").kind, SelectionKind::kSmallestDegree);
    EXPECT_EQ(Selection::parse("largest-degree").kind, SelectionKind::kLargestDegree);
    const Selection above = Selection::parse("smallest-degree-above(6)");
    EXPECT_EQ(above.kind, SelectionKind::kSmallestDegreeAbove);
    EXPECT_EQ(above.param, 6u);
    EXPECT_EQ(Selection::parse("smallest-degree-above:4").param, 4u);
    const Selection kth = Selection::parse("kth-canonical=2");
    EXPECT_EQ(kth.kind, SelectionKind::kKthCanonical);
    EXPECT_EQ(kth.param, 2u);
    EXPECT_EQ(Selection::parse(kth.name()).param, 2u);
    for (const char* bad : {"", "middle", "kth-canonical", "kth-canonical(x)", "smallest-degree-above(3"}) {
        EXPECT_EQ(code_of([&] { Selection::parse(bad); }), ErrorCode::kInvalidArgument) << bad;
    }
}

TEST(Selection, Choice) {
    const FieldCtx k = FieldCtx::prime(7);
    // (x + 1)(x^2 + 1)(x^2 + 2)(x^3 + x + 1)
    const Poly f = Poly(k, {Elem{1}, Elem{1}}) * Poly(k, {Elem{1}, Elem{0}, Elem{1}}) *
                   Poly(k, {Elem{2}, Elem{0}, Elem{1}}) * Poly(k, {Elem{1}, Elem{1}, Elem{0}, Elem{1}});
    const Factorization fac = factor(f, 1);
    ASSERT_EQ(fac.factors.size(), 4u);
    auto deg = [&](const Selection& s) { return fac.factors[select_factor(fac, s)].factor.degree(); };
    EXPECT_EQ(deg(Selection::parse("smallest-degree")), 1);
    EXPECT_EQ(deg(Selection::parse("largest-degree")), 3);
    EXPECT_EQ(deg(Selection::parse("smallest-degree-above(1)")), 2);
    EXPECT_EQ(deg(Selection::parse("smallest-degree-above(9)")), 3);
    EXPECT_EQ(select_factor(fac, Selection::parse("kth-canonical(2)")), 2u);
    EXPECT_EQ(select_factor(fac, Selection::parse("kth-canonical(40)")), 3u);
    // Two quadratics tie; the canonical first one wins.
    const std::size_t q = select_factor(fac, Selection::parse("smallest-degree-above(1)"));
    EXPECT_TRUE(canonical_less(fac.factors[q].factor, fac.factors[q + 1].factor));
}

TEST(Sequence, InitialStateErrors) {
    const auto ex = testing::load_example83();
    const SequenceParams params = example_params(ex);
    const FieldCtx& k = ex.curve.ctx();
    EXPECT_EQ(code_of([&] { initial_state(ex.f0, params); }), ErrorCode::kOk);
    EXPECT_EQ(code_of([&] { initial_state(scale(ex.f0, k.from_int(2)), params); }), ErrorCode::kInvalidArgument);
    const Poly reducible = Poly(k, {Elem{1}, Elem{1}}) * Poly(k, {Elem{0}, Elem{0}, Elem{1}});
    EXPECT_EQ(code_of([&] { initial_state(reducible, params); }), ErrorCode::kInvalidArgument);
    EXPECT_EQ(code_of([&] { initial_state(Poly(k, {Elem{5}, Elem{1}}), params); }), ErrorCode::kDegreeMismatch);
    EXPECT_EQ(code_of([&] { initial_state(Poly(k, {Elem{1}}), params); }), ErrorCode::kDegreeZero);
    const FieldCtx other = FieldCtx::prime(89);
    const Poly foreign = first_irreducible(other, 3);
    EXPECT_EQ(code_of([&] { initial_state(foreign, params); }), ErrorCode::kContextMismatch);
}

TEST(Sequence, ExampleDegrees) {
    const auto ex = testing::load_example83();
    const SequenceRun run = ecirr::run(ex.f0, example_params(ex), 2, 7);
    EXPECT_EQ(degrees(run), (std::vector<int>{3, 6, 102}));
    EXPECT_EQ(run.retries, 0u);
    EXPECT_LE(run.factorizations_after_first, 1u);
    ASSERT_TRUE(run.switch_index.has_value());
    EXPECT_EQ(*run.switch_index, 2u);
    EXPECT_EQ(run.origins[0], Origin::kInitial);
    EXPECT_EQ(run.origins[1], Origin::kFactor);
    EXPECT_EQ(run.origins[2], Origin::kFactor);
    for (const Poly& f : run.polys) {
        EXPECT_TRUE(f.is_monic());
        EXPECT_TRUE(is_irreducible(f));
    }
}

TEST(Sequence, PrefixConsistent) {
    const auto ex = testing::load_example83();
    const SequenceParams params = example_params(ex);
    const SequenceRun shorter = ecirr::run(ex.f0, params, 1, 7);
    const SequenceRun longer = ecirr::run(ex.f0, params, 2, 7);
    ASSERT_EQ(shorter.polys.size(), 2u);
    EXPECT_EQ(degrees(shorter), (std::vector<int>{3, 6}));
    for (std::size_t i = 0; i < shorter.polys.size(); ++i) EXPECT_EQ(shorter.polys[i], longer.polys[i]);
    EXPECT_EQ(ecirr::run(ex.f0, params, 0, 7).polys.size(), 1u);
}

TEST(Sequence, SeedIndependent) {
    const auto ex = testing::load_example83();
    const SequenceParams params = example_params(ex);
    const SequenceRun a = ecirr::run(ex.f0, params, 2, 1);
    const SequenceRun b = ecirr::run(ex.f0, params, 2, 99);
    for (std::size_t i = 0; i < a.polys.size(); ++i) EXPECT_EQ(a.polys[i], b.polys[i]);
}

TEST(Sequence, SmallestDegreeRecovers) {
    const auto ex = testing::load_example83();
    SequenceParams params(ex.map, ex.d);
    params.selection = Selection::parse("smallest-degree");
    const SequenceRun run = ecirr::run(ex.f0, params, 2, 7);
    EXPECT_EQ(degrees(run), (std::vector<int>{3, 6, 102}));
    EXPECT_EQ(run.retries, 1u);
    ASSERT_EQ(run.abandoned.size(), 1u);
    EXPECT_EQ(run.abandoned[0].size(), params.max_sub1_steps + 1);
    for (int deg : run.abandoned[0]) EXPECT_LE(deg, 2 * static_cast<int>(ex.d));
    EXPECT_EQ(run.first_choice, 1u);
    // f_0^r is factored once and shared by both branches.
    EXPECT_EQ(run.factorizations, params.max_sub1_steps + run.factorizations_after_first);
}

TEST(Sequence, KnownBudgetRestartsSooner) {
    const auto ex = testing::load_example83();
    SequenceParams params = example_params(ex);
    params.selection = Selection::parse("smallest-degree");
    const SequenceRun run = ecirr::run(ex.f0, params, 2, 7);
    EXPECT_EQ(degrees(run), (std::vector<int>{3, 6, 102}));
    ASSERT_EQ(run.abandoned.size(), 1u);
    EXPECT_EQ(run.abandoned[0].size(), 3u);
}

TEST(Sequence, ExhaustedChoices) {
    const auto ex = testing::load_example83();
    SequenceParams params = example_params(ex);
    params.k0 = 0;
    EXPECT_EQ(code_of([&] { ecirr::run(ex.f0, params, 2, 7); }), ErrorCode::kExhaustedChoices);
}

TEST(Sequence, Sub2Verification) {
    const auto ex = testing::load_example83();
    SequenceParams params = example_params(ex);
    params.verify_sub2 = false;
    const SequenceRun off = ecirr::run(ex.f0, params, 3, 7);
    EXPECT_EQ(degrees(off), (std::vector<int>{3, 6, 102, 1734}));
    EXPECT_EQ(off.origins[3], Origin::kTransform);
    EXPECT_EQ(off.phases[3], Phase::kSub2);
    EXPECT_FALSE(off.verified[3]);

    params.verify_sub2.reset();
    params.verify_degree_cap = 1000;
    EXPECT_FALSE(params.should_verify(1734));
    EXPECT_TRUE(params.should_verify(999));

    // Forcing a pure transform of f_0 exposes a reducible step.
    params.verify_sub2 = true;
    IterationState st = initial_state(ex.f0, params);
    st.phase = Phase::kSub2;
    EXPECT_EQ(code_of([&] { step_sub2(st, params); }), ErrorCode::kIrreducibilityViolation);
}

TEST(Sequence, StepSub1Choice) {
    const auto ex = testing::load_example83();
    const SequenceParams params = example_params(ex);
    const IterationState st = initial_state(ex.f0, params);
    const Factorization fac = factor(r_transform(ex.f0, ex.map), 3);
    for (std::size_t c = 0; c < fac.factors.size(); ++c) {
        const IterationState next = step_sub1(st, params, 3, c);
        EXPECT_EQ(next.f, fac.factors[c].factor);
        EXPECT_EQ(next.i, 1u);
        EXPECT_EQ(next.history.back().choice, c);
        EXPECT_EQ(next.history.back().num_factors, fac.factors.size());
    }
}

TEST(Sequence, Fixtures) {
    for (const auto& name : testing::fixture_names()) {
        SCOPED_TRACE(name);
        const auto fx = testing::load_fixture(name);
        const FieldCtx& k = fx.curve.ctx();
        SequenceParams params(fx.map, fx.d);
        params.k0 = fx.k0;
        params.verify_sub2 = true;
        const Poly f0 = first_irreducible(k, fx.d);
        const SequenceRun run = ecirr::run(f0, params, 3, 11);
        ASSERT_EQ(run.polys.size(), 4u);
        EXPECT_LE(run.factorizations_after_first, fx.k0);
        for (std::size_t i = 1; i < run.polys.size(); ++i) {
            EXPECT_TRUE(is_irreducible(run.polys[i]));
            if (run.origins[i] == Origin::kTransform) {
                EXPECT_EQ(static_cast<u64>(run.polys[i].degree()), fx.l * run.polys[i - 1].degree());
            }
        }
    }
}

}  // namespace
}  // namespace ecirr
