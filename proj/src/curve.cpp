/*
   Copyright 2026 The ecirr Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ecirr/curve.hpp"

#include <algorithm>

#include "ecirr/error.hpp"

namespace ecirr {

Curve Curve::make(FieldCtx ctx, Elem A, Elem B) {
    if (!ctx.contains(A) || !ctx.contains(B)) fail(ErrorCode::kInvalidArgument, "coefficient outside the field");
    const Elem a3 = ctx.mul(ctx.sqr(A), A);
    const Elem disc = ctx.add(ctx.mul(ctx.from_int(4), a3), ctx.mul(ctx.from_int(27), ctx.sqr(B)));
    if (disc.v == 0) fail(ErrorCode::kSingularCurve, "4A^3 + 27B^2 = 0");
    return Curve(std::move(ctx), A, B);
}

Elem Curve::rhs(Elem x) const noexcept {
    const auto& k = ctx_;
    return k.add(k.mul(k.add(k.sqr(x), A_), x), B_);
}

Curve Curve::lift_to(const FieldCtx& ext) const {
    if (ctx_.n() != 1 || ext.p() != ctx_.p()) fail(ErrorCode::kContextMismatch, "lift requires a curve over F_p");
    return Curve::make(ext, A_, B_);
}

bool on_curve(const Curve& c, const CurvePoint& P) noexcept {
    if (P.is_identity()) return true;
    const auto& k = c.ctx();
    return k.contains(P.x()) && k.contains(P.y()) && k.sqr(P.y()) == c.rhs(P.x());
}

namespace {

void require_on_curve(const Curve& c, const CurvePoint& P) {
    if (!on_curve(c, P)) fail(ErrorCode::kPointNotOnCurve, "point does not satisfy the curve equation");
}

CurvePoint add_unchecked(const Curve& c, const CurvePoint& P, const CurvePoint& Q) {
    if (P.is_identity()) return Q;
    if (Q.is_identity()) return P;
    const auto& k = c.ctx();
    Elem lambda;
    if (P.x() == Q.x()) {
        if (k.add(P.y(), Q.y()).v == 0) return CurvePoint::identity();
        const Elem num = k.add(k.mul(k.from_int(3), k.sqr(P.x())), c.A());
        lambda = k.div(num, k.add(P.y(), P.y()));
    } else {
        lambda = k.div(k.sub(Q.y(), P.y()), k.sub(Q.x(), P.x()));
    }
    const Elem x3 = k.sub(k.sub(k.sqr(lambda), P.x()), Q.x());
    const Elem y3 = k.sub(k.mul(lambda, k.sub(P.x(), x3)), P.y());
    return CurvePoint::affine(x3, y3);
}

}  // namespace

CurvePoint point_neg(const Curve& c, const CurvePoint& P) {
    if (P.is_identity()) return P;
    return CurvePoint::affine(P.x(), c.ctx().neg(P.y()));
}

CurvePoint point_add(const Curve& c, const CurvePoint& P, const CurvePoint& Q) {
    require_on_curve(c, P);
    require_on_curve(c, Q);
    return add_unchecked(c, P, Q);
}

CurvePoint scalar_mul(const Curve& c, i64 k, const CurvePoint& P) {
    require_on_curve(c, P);
    CurvePoint base = k < 0 ? point_neg(c, P) : P;
    // Magnitude as unsigned so that INT64_MIN is handled.
    u64 e = k < 0 ? u64{0} - static_cast<u64>(k) : static_cast<u64>(k);
    CurvePoint acc = CurvePoint::identity();
    while (e) {
        if (e & 1) acc = add_unchecked(c, acc, base);
        e >>= 1;
        if (e) base = add_unchecked(c, base, base);
    }
    return acc;
}

CurvePoint random_point(const Curve& c, Rng& rng) {
    const auto& k = c.ctx();
    const u64 attempts = 64 + 8 * std::min<u64>(k.order(), u64{1} << 20);
    for (u64 i = 0; i < attempts; ++i) {
        const Elem x = k.random(rng);
        if (auto y = k.sqrt(c.rhs(x))) {
            const bool flip = (rng() & 1) != 0;
            return CurvePoint::affine(x, flip ? k.neg(*y) : *y);
        }
    }
    fail(ErrorCode::kInvalidArgument, "curve has no affine points to sample");
}

std::vector<CurvePoint> enumerate_points(const Curve& c, u64 cap) {
    const auto& k = c.ctx();
    std::vector<CurvePoint> out{CurvePoint::identity()};
    for (Elem x : k.enumerate(cap)) {
        if (auto y = k.sqrt(c.rhs(x))) {
            out.push_back(CurvePoint::affine(x, *y));
            if (y->v != 0) out.push_back(CurvePoint::affine(x, k.neg(*y)));
        }
    }
    return out;
}

CurveOrderData count_points(const Curve& c, u64 cap) {
    const auto& k = c.ctx();
    if (k.order() > cap) {
        fail(ErrorCode::kFieldTooLarge, "point counting needs q <= " + std::to_string(cap));
    }
    u64 count = 1;
    for (u64 v = 0; v < k.order(); ++v) count += static_cast<u64>(1 + k.quadratic_character(c.rhs(Elem{v})));
    const i64 trace = static_cast<i64>(k.order() + 1) - static_cast<i64>(count);
    return {count, trace};
}

bool is_ordinary(const Curve& c, u64 cap) {
    const i64 t = count_points(c, cap).trace;
    return t % static_cast<i64>(c.ctx().p()) != 0;
}

CurvePoint apply_endomorphism(const Curve& c, const RationalMap& m, const CurvePoint& P) {
    if (!m.y_map()) fail(ErrorCode::kInvalidArgument, "map carries no y-coordinate factor");
    if (P.is_identity()) return P;
    const auto& k = c.ctx();
    const Elem bx = m.b().eval(P.x());
    if (bx.v == 0) return CurvePoint::identity();
    const Elem sden = m.y_map()->den.eval(P.x());
    if (sden.v == 0) fail(ErrorCode::kDivisionByZero, "y-map has a pole where r does not");
    const Elem X = k.div(m.a().eval(P.x()), bx);
    const Elem Y = k.mul(P.y(), k.div(m.y_map()->num.eval(P.x()), sden));
    return CurvePoint::affine(X, Y);
}

EndomorphismReport verify_endomorphism(const Curve& c, const RationalMap& m, u64 samples, u64 seed, u64 cap) {
    if (!(c.ctx() == m.ctx())) fail(ErrorCode::kContextMismatch, "curve and map over different fields");
    const auto& k = c.ctx();
    EndomorphismReport rep;

    const unsigned l = m.degree();
    const bool l_ok = l > 2 && is_prime_u64(l);
    const bool deg_ok = m.a().degree() == static_cast<int>(l) && m.b().degree() == static_cast<int>(l) - 1;
    rep.degree_ok = l_ok && deg_ok;
    if (!l_ok) {
        rep.degree_detail = "degree " + std::to_string(l) + " is not an odd prime";
    } else if (!deg_ok) {
        rep.degree_detail = "expected deg a = " + std::to_string(l) + " and deg b = " + std::to_string(l - 1) +
                            ", got " + std::to_string(m.a().degree()) + " and " + std::to_string(m.b().degree());
    } else {
        rep.degree_detail = "ok";
    }

    auto x_compatible = [&](Elem x) {
        const ProjPoint img = map_eval(m, ProjPoint::affine(x));
        return img.is_infinity() || k.quadratic_character(c.rhs(img.x())) >= 0;
    };

    Rng rng(seed);
    std::vector<CurvePoint> checked;
    rep.exhaustive = k.order() <= cap;
    if (rep.exhaustive) {
        std::vector<u64> fiber(k.order() + 1, 0);
        fiber[k.order()] = 1;  // infinity maps to itself
        for (u64 v = 0; v < k.order(); ++v) {
            const Elem x = Elem{v};
            const ProjPoint img = map_eval(m, ProjPoint::affine(x));
            ++fiber[img.is_infinity() ? k.order() : img.x().v];
            const auto y = k.sqrt(c.rhs(x));
            if (!y) continue;
            ++rep.points_checked;
            if (!x_compatible(x)) ++rep.x_failures;
            if (m.y_map()) checked.push_back(CurvePoint::affine(x, *y));
        }
        rep.max_fiber = *std::max_element(fiber.begin(), fiber.end());
    } else {
        for (u64 i = 0; i < samples; ++i) {
            const CurvePoint P = random_point(c, rng);
            ++rep.points_checked;
            if (!x_compatible(P.x())) ++rep.x_failures;
            if (m.y_map()) checked.push_back(P);
        }
    }

    if (m.y_map()) {
        rep.y_map_checked = true;
        auto image = [&](const CurvePoint& P, bool& ok) {
            try {
                CurvePoint Q = apply_endomorphism(c, m, P);
                ok = on_curve(c, Q);
                return Q;
            } catch (const Error&) {
                ok = false;
                return CurvePoint::identity();
            }
        };
        for (const CurvePoint& P : checked) {
            bool ok = true;
            image(P, ok);
            ++rep.y_points_checked;
            if (!ok) ++rep.y_not_on_curve;
        }
        for (u64 i = 0; i < samples; ++i) {
            const CurvePoint P = random_point(c, rng);
            const CurvePoint Q = random_point(c, rng);
            bool ok1 = true, ok2 = true, ok3 = true;
            const CurvePoint lhs = image(add_unchecked(c, P, Q), ok1);
            const CurvePoint aP = image(P, ok2);
            const CurvePoint aQ = image(Q, ok3);
            ++rep.pairs_checked;
            if (!(ok1 && ok2 && ok3) || lhs != add_unchecked(c, aP, aQ)) ++rep.additivity_failures;
        }
    }
    return rep;
}

}  // namespace ecirr
