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

#include "ecirr/ratmap.hpp"

#include "ecirr/error.hpp"
#include "poly_kernels.hpp"

namespace ecirr {

RationalMap RationalMap::make(Poly a, Poly b, unsigned l, std::optional<YMap> s) {
    detail::require_same_field(a, b);
    if (a.degree() < 1) fail(ErrorCode::kDegreeZero, "numerator must have positive degree");
    if (b.is_zero()) fail(ErrorCode::kDegreeZero, "denominator must be nonzero");
    if (b.degree() >= a.degree()) fail(ErrorCode::kDegreeMismatch, "deg b must be below deg a");
    if (static_cast<int>(l) != a.degree()) {
        fail(ErrorCode::kDegreeMismatch,
             "declared degree " + std::to_string(l) + " differs from deg a = " + std::to_string(a.degree()));
    }
    if (!gcd(a, b).is_one()) fail(ErrorCode::kNotCoprime, "a and b share a common factor");
    if (s) {
        detail::require_same_field(a, s->num);
        detail::require_same_field(a, s->den);
        if (s->den.is_zero()) fail(ErrorCode::kDivisionByZero, "s denominator is zero");
    }
    const Elem unit = a.lead();
    const Elem inv = a.ctx().inv(unit);
    Poly an = scale(a, inv);
    Poly bn = scale(b, inv);
    return RationalMap(std::move(an), std::move(bn), l, std::move(s), unit);
}

namespace {

Poly lift_poly(const Poly& f, const FieldCtx& ext) {
    const auto& src = f.ctx();
    if (src.n() != 1) fail(ErrorCode::kContextMismatch, "only maps over a prime field can be lifted");
    if (src.p() != ext.p()) fail(ErrorCode::kContextMismatch, "lift requires the same characteristic");
    std::vector<Elem> c;
    c.reserve(f.coeffs().size());
    // Packed value of a prime-subfield element is its residue in both fields.
    for (Elem e : f.coeffs()) c.push_back(e);
    return Poly(ext, std::move(c));
}

}  // namespace

RationalMap RationalMap::lift_to(const FieldCtx& ext) const {
    std::optional<YMap> s;
    if (s_) s = YMap{lift_poly(s_->num, ext), lift_poly(s_->den, ext)};
    return RationalMap(lift_poly(a_, ext), lift_poly(b_, ext), l_, std::move(s), unit_);
}

ProjPoint map_eval(const RationalMap& m, ProjPoint pt) {
    if (pt.is_infinity()) return pt;
    const auto& ctx = m.ctx();
    const Elem den = m.b().eval(pt.x());
    if (den.v == 0) return ProjPoint::infinity();
    return ProjPoint::affine(ctx.div(m.a().eval(pt.x()), den));
}

ProjPoint map_iterate(const RationalMap& m, u64 k, ProjPoint pt) {
    if (k == 0) fail(ErrorCode::kInvalidArgument, "iteration count must be positive");
    for (u64 i = 0; i < k && !pt.is_infinity(); ++i) pt = map_eval(m, pt);
    return pt;
}

Poly r_transform(const Poly& g, const RationalMap& m) {
    detail::require_same_field(g, m.a());
    if (g.degree() < 1) fail(ErrorCode::kDegreeZero, "r-transform of a constant");
    const auto& ctx = g.ctx();
    const std::size_t d = static_cast<std::size_t>(g.degree());

    // b^j for j = 0..d
    std::vector<Poly> bpow;
    bpow.reserve(d + 1);
    bpow.push_back(Poly::constant(ctx, ctx.one()));
    for (std::size_t j = 1; j <= d; ++j) bpow.push_back(bpow.back() * m.b());

    Poly h = Poly::constant(ctx, g.coeff(d));
    for (std::size_t k = d; k-- > 0;) {
        h = h * m.a();
        const Elem gk = g.coeff(k);
        if (gk.v != 0) h = h + scale(bpow[d - k], gk);
    }
    return h;
}

}  // namespace ecirr
