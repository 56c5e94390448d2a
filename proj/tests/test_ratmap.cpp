#include <gtest/gtest.h>

#include "ecirr/error.hpp"
#include "support.hpp"

namespace ecirr {
namespace {

using testing::random_poly;

Poly P(const FieldCtx& k, std::vector<i64> c) { return Poly::from_ints(k, c); }

ErrorCode make_error(const Poly& a, const Poly& b, unsigned l) {
    try {
        RationalMap::make(a, b, l);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::kOk;
}

/// sum_k g_k a^k b^(d - k), written out directly.
Poly transform_by_sum(const Poly& g, const Poly& a, const Poly& b) {
    const FieldCtx& k = g.ctx();
    Poly out(k);
    const int d = g.degree();
    for (int i = 0; i <= d; ++i) {
        Poly term = Poly::constant(k, g.coeff(i));
        for (int j = 0; j < i; ++j) term = term * a;
        for (int j = 0; j < d - i; ++j) term = term * b;
        out = out + term;
    }
    return out;
}

TEST(RationalMap, ConstructionErrors) {
    const FieldCtx k = FieldCtx::prime(7);
    EXPECT_EQ(make_error(P(k, {1}), P(k, {1}), 0), ErrorCode::kDegreeZero);
    EXPECT_EQ(make_error(P(k, {0, 1}), Poly(k), 1), ErrorCode::kDegreeZero);
    EXPECT_EQ(make_error(P(k, {0, 1}), P(k, {1, 1}), 1), ErrorCode::kDegreeMismatch);
    EXPECT_EQ(make_error(P(k, {0, 0, 1}), P(k, {1}), 3), ErrorCode::kDegreeMismatch);
    EXPECT_EQ(make_error(P(k, {0, 1, 1}), P(k, {0, 1}), 2), ErrorCode::kNotCoprime);
    EXPECT_EQ(make_error(P(k, {0, 0, 1}), P(FieldCtx::prime(5), {1}), 2), ErrorCode::kContextMismatch);
    EXPECT_EQ(make_error(P(k, {0, 0, 0, 0, 1}), P(k, {1}), 4), ErrorCode::kOk);
}

TEST(RationalMap, NormalizesLeadingCoefficient) {
    const auto ex = testing::load_example83();
    EXPECT_TRUE(ex.map.a().is_monic());
    EXPECT_EQ(ex.map.normalization_unit(), ex.map.ctx().from_int(4));
    EXPECT_EQ(ex.map.degree(), 17u);
    EXPECT_EQ(ex.map.b().degree(), 16);
}

TEST(RationalMap, EvaluationAndIteration) {
    const FieldCtx k = FieldCtx::prime(7);
    const RationalMap m = RationalMap::make(P(k, {1, 0, 1}), P(k, {0, 1}), 2);  // (x^2 + 1)/x
    EXPECT_TRUE(map_eval(m, ProjPoint::affine(Elem{0})).is_infinity());
    EXPECT_TRUE(map_eval(m, ProjPoint::infinity()).is_infinity());
    EXPECT_EQ(map_eval(m, ProjPoint::affine(Elem{2})).x(), k.div(k.from_int(5), k.from_int(2)));
    const ProjPoint once = map_eval(m, ProjPoint::affine(Elem{3}));
    EXPECT_EQ(map_iterate(m, 2, ProjPoint::affine(Elem{3})), map_eval(m, once));
    EXPECT_THROW(map_iterate(m, 0, ProjPoint::infinity()), Error);
}

TEST(RTransform, ExampleDegreeAndMonicity) {
    const auto ex = testing::load_example83();
    const Poly t = r_transform(ex.f0, ex.map);
    EXPECT_EQ(t.degree(), 51);
    EXPECT_TRUE(t.is_monic());

    // Without normalization the leading coefficient is 4^3 = 64 = -19.
    const FieldCtx& k = ex.map.ctx();
    ASSERT_EQ(ex.map.normalization_unit(), k.from_int(4));
    const Poly a_printed = scale(ex.map.a(), k.from_int(4));
    const Poly b_printed = scale(ex.map.b(), k.from_int(4));
    const Poly raw = transform_by_sum(ex.f0, a_printed, b_printed);
    EXPECT_EQ(raw.lead(), k.from_int(64));
    EXPECT_EQ(raw.lead(), k.from_int(-19));
    EXPECT_EQ(monic(raw), t);
}

TEST(RTransform, MatchesDirectSum) {
    Rng rng(21);
    for (u64 p : {5, 7, 83}) {
        const FieldCtx k = FieldCtx::prime(p);
        for (int i = 0; i < 30; ++i) {
            const unsigned l = 1 + static_cast<unsigned>(rng() % 5);
            Poly a = random_poly(k, static_cast<int>(l), rng, true);
            Poly b = random_poly(k, static_cast<int>(rng() % l), rng, false);
            if (!gcd(a, b).is_one()) continue;
            const RationalMap m = RationalMap::make(a, b, l);
            const Poly g = random_poly(k, 1 + static_cast<int>(rng() % 6), rng, false);
            EXPECT_EQ(r_transform(g, m), transform_by_sum(g, m.a(), m.b()));
        }
    }
    const FieldCtx k = FieldCtx::prime(5);
    const RationalMap m = RationalMap::make(P(k, {0, 0, 1}), P(k, {1}), 2);
    EXPECT_THROW(r_transform(P(k, {3}), m), Error);
}

TEST(RTransform, ExtensionLift) {
    const auto fx = testing::load_fixture("D11_l3_p23_d2");
    const FieldCtx ext = standard_extension(23, 2);
    const RationalMap lifted = fx.map.lift_to(ext);
    EXPECT_EQ(lifted.ctx(), ext);
    Rng rng(8);
    for (int i = 0; i < 50; ++i) {
        const Elem x = ext.random(rng);
        const ProjPoint y = map_eval(lifted, ProjPoint::affine(x));
        const Elem bx = lifted.b().eval(x);
        if (bx.v == 0) {
            EXPECT_TRUE(y.is_infinity());
        } else {
            EXPECT_EQ(y.x(), ext.div(lifted.a().eval(x), bx));
        }
    }
    EXPECT_THROW(fx.map.lift_to(standard_extension(5, 2)), Error);
}

}  // namespace
}  // namespace ecirr
