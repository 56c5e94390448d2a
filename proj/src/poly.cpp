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

#include "ecirr/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "ecirr/error.hpp"
#include "poly_kernels.hpp"

namespace ecirr {

namespace detail {

u64 accumulation_budget(u64 p) noexcept {
    const u64 sq = (p - 1) * (p - 1);
    if (sq == 0) return std::numeric_limits<u64>::max();
    const u64 budget = (std::numeric_limits<u64>::max() - p) / sq;
    return budget == 0 ? 1 : budget;
}

void require_same_field(const Poly& f, const Poly& g) {
    if (!(f.ctx() == g.ctx())) fail(ErrorCode::kContextMismatch, "polynomials over different fields");
}

}  // namespace detail

using detail::accumulation_budget;
using detail::require_same_field;

Poly::Poly(FieldCtx ctx, std::vector<Elem> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    for (Elem c : c_) {
        if (!ctx_.contains(c)) fail(ErrorCode::kInvalidArgument, "coefficient outside the field");
    }
    normalize();
}

void Poly::normalize() noexcept {
    while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

Poly Poly::from_ints(const FieldCtx& ctx, std::span<const i64> coeffs) {
    std::vector<Elem> c;
    c.reserve(coeffs.size());
    for (i64 v : coeffs) c.push_back(ctx.from_int(v));
    return Poly(ctx, std::move(c));
}

Poly Poly::constant(const FieldCtx& ctx, Elem c) { return Poly(ctx, {c}); }

Poly Poly::monomial(const FieldCtx& ctx, Elem c, std::size_t k) {
    std::vector<Elem> v(k + 1);
    v[k] = c;
    return Poly(ctx, std::move(v));
}

Elem Poly::eval(Elem x) const noexcept {
    Elem acc{};
    for (std::size_t i = c_.size(); i-- > 0;) acc = ctx_.add(ctx_.mul(acc, x), c_[i]);
    return acc;
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].v == 0) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit = c_[i] == ctx_.one();
        if (!unit || i == 0) os << ctx_.to_string(c_[i]);
        if (i > 0) {
            if (!unit) os << '*';
            os << 'x';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

Poly operator+(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    const auto& ctx = f.ctx();
    const std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
    std::vector<Elem> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = ctx.add(f.coeff(i), g.coeff(i));
    return Poly(ctx, std::move(out));
}

Poly operator-(const Poly& f) {
    std::vector<Elem> out(f.coeffs().begin(), f.coeffs().end());
    for (Elem& c : out) c = f.ctx().neg(c);
    return Poly(f.ctx(), std::move(out));
}

Poly operator-(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    const auto& ctx = f.ctx();
    const std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
    std::vector<Elem> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = ctx.sub(f.coeff(i), g.coeff(i));
    return Poly(ctx, std::move(out));
}

Poly operator*(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    const auto& ctx = f.ctx();
    if (f.is_zero() || g.is_zero()) return Poly(ctx);
    const auto a = f.coeffs();
    const auto b = g.coeffs();
    std::vector<Elem> out(a.size() + b.size() - 1);
    if (ctx.n() == 1) {
        const u64 p = ctx.p();
        const u64 budget = accumulation_budget(p);
        std::vector<u64> acc(out.size(), 0);
        u64 rows = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const u64 ai = a[i].v;
            if (ai == 0) continue;
            u64* dst = acc.data() + i;
            for (std::size_t j = 0; j < b.size(); ++j) dst[j] += ai * b[j].v;
            if (++rows == budget) {
                for (u64& v : acc) v %= p;
                rows = 0;
            }
        }
        for (std::size_t k = 0; k < acc.size(); ++k) out[k] = Elem{acc[k] % p};
    } else {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].v == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = ctx.add(out[i + j], ctx.mul(a[i], b[j]));
        }
    }
    return Poly(ctx, std::move(out));
}

Poly scale(const Poly& f, Elem c) {
    std::vector<Elem> out(f.coeffs().begin(), f.coeffs().end());
    for (Elem& v : out) v = f.ctx().mul(v, c);
    return Poly(f.ctx(), std::move(out));
}

Poly shift(const Poly& f, std::size_t k) {
    if (f.is_zero()) return f;
    std::vector<Elem> out(k, Elem{});
    out.insert(out.end(), f.coeffs().begin(), f.coeffs().end());
    return Poly(f.ctx(), std::move(out));
}

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    if (g.is_zero()) fail(ErrorCode::kDivisionByZero, "polynomial division by zero");
    const auto& ctx = f.ctx();
    if (f.degree() < g.degree()) return {Poly(ctx), f};

    const std::size_t dg = static_cast<std::size_t>(g.degree());
    const std::size_t df = static_cast<std::size_t>(f.degree());
    const auto b = g.coeffs();
    std::vector<Elem> q(df - dg + 1);
    const Elem inv_lead = ctx.inv(g.lead());

    if (ctx.n() == 1) {
        const u64 p = ctx.p();
        std::vector<u64> r(df + 1);
        for (std::size_t i = 0; i <= df; ++i) r[i] = f.coeffs()[i].v;
        std::vector<u64> negb(dg);
        for (std::size_t j = 0; j < dg; ++j) negb[j] = b[j].v == 0 ? 0 : p - b[j].v;
        for (std::size_t i = df + 1; i-- > dg;) {
            const u64 c = (r[i] * inv_lead.v) % p;
            q[i - dg] = Elem{c};
            r[i] = 0;
            if (c == 0) continue;
            u64* dst = r.data() + (i - dg);
            for (std::size_t j = 0; j < dg; ++j) dst[j] = (dst[j] + c * negb[j]) % p;
        }
        std::vector<Elem> rem(dg);
        for (std::size_t j = 0; j < dg; ++j) rem[j] = Elem{r[j]};
        return {Poly(ctx, std::move(q)), Poly(ctx, std::move(rem))};
    }

    std::vector<Elem> r(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t i = df + 1; i-- > dg;) {
        const Elem c = ctx.mul(r[i], inv_lead);
        q[i - dg] = c;
        r[i] = Elem{};
        if (c.v == 0) continue;
        for (std::size_t j = 0; j < dg; ++j) r[i - dg + j] = ctx.sub(r[i - dg + j], ctx.mul(c, b[j]));
    }
    r.resize(dg);
    return {Poly(ctx, std::move(q)), Poly(ctx, std::move(r))};
}

Poly rem(const Poly& f, const Poly& g) {
    if (f.degree() < g.degree() && !g.is_zero()) {
        require_same_field(f, g);
        return f;
    }
    return divrem(f, g).second;
}

Poly exact_quotient(const Poly& f, const Poly& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) fail(ErrorCode::kNotDivisible, "polynomial does not divide");
    return q;
}

Poly monic(const Poly& f) {
    if (f.is_zero() || f.is_monic()) return f;
    return scale(f, f.ctx().inv(f.lead()));
}

Poly derivative(const Poly& f) {
    const auto& ctx = f.ctx();
    if (f.degree() < 1) return Poly(ctx);
    std::vector<Elem> out(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
        out[i - 1] = ctx.mul(ctx.from_int(static_cast<i64>(i % ctx.p())), f.coeffs()[i]);
    }
    return Poly(ctx, std::move(out));
}

Poly gcd(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    if (f.is_zero() && g.is_zero()) fail(ErrorCode::kBothZero, "gcd(0, 0) is undefined");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Poly mulmod(const Poly& f, const Poly& g, const Poly& m) { return rem(f * g, m); }

Poly powmod(const Poly& f, u64 e, const Poly& m) {
    require_same_field(f, m);
    if (m.is_zero()) fail(ErrorCode::kDivisionByZero, "powmod with zero modulus");
    Poly base = rem(f, m);
    Poly result = rem(Poly::constant(f.ctx(), f.ctx().one()), m);
    while (e) {
        if (e & 1) result = mulmod(result, base, m);
        e >>= 1;
        if (e) base = mulmod(base, base, m);
    }
    return result;
}

Poly compose_mod(const Poly& g, const Poly& h, const Poly& m) {
    require_same_field(g, h);
    Poly hr = rem(h, m);
    Poly acc(g.ctx());
    for (std::size_t i = g.coeffs().size(); i-- > 0;) {
        acc = mulmod(acc, hr, m) + Poly::constant(g.ctx(), g.coeffs()[i]);
    }
    return rem(acc, m);
}

namespace {

// v <- x * v mod m for monic m of degree dim, v of length dim.
void times_x_mod(const FieldCtx& ctx, std::vector<Elem>& v, std::span<const Elem> m) {
    const std::size_t dim = v.size();
    const Elem top = v[dim - 1];
    for (std::size_t k = dim - 1; k > 0; --k) v[k] = v[k - 1];
    v[0] = Elem{};
    if (top.v == 0) return;
    for (std::size_t k = 0; k < dim; ++k) v[k] = ctx.sub(v[k], ctx.mul(top, m[k]));
}

void times_x_mod_prime(u64 p, std::vector<u64>& v, const std::vector<u64>& negm) {
    const std::size_t dim = v.size();
    const u64 top = v[dim - 1];
    for (std::size_t k = dim - 1; k > 0; --k) v[k] = v[k - 1];
    v[0] = 0;
    if (top == 0) return;
    for (std::size_t k = 0; k < dim; ++k) v[k] = (v[k] + top * negm[k]) % p;
}

}  // namespace

FrobeniusMap::FrobeniusMap(const Poly& modulus) : modulus_(monic(modulus)) {
    if (modulus_.degree() < 1) fail(ErrorCode::kDegreeZero, "Frobenius map needs a modulus of positive degree");
    const auto& ctx = modulus_.ctx();
    dim_ = static_cast<std::size_t>(modulus_.degree());
    columns_.assign(dim_ * dim_, Elem{});
    columns_[0] = ctx.one();
    if (dim_ == 1) return;

    const u64 Q = ctx.order();
    const auto m = modulus_.coeffs();
    if (Q < 2 * dim_) {
        // Walk x^(iQ) by repeated multiplication by x: O(Q dim^2) total.
        if (ctx.n() == 1) {
            const u64 p = ctx.p();
            std::vector<u64> negm(dim_);
            for (std::size_t k = 0; k < dim_; ++k) negm[k] = m[k].v == 0 ? 0 : p - m[k].v;
            std::vector<u64> v(dim_, 0);
            v[0] = 1;
            for (std::size_t i = 1; i < dim_; ++i) {
                for (u64 s = 0; s < Q; ++s) times_x_mod_prime(p, v, negm);
                for (std::size_t k = 0; k < dim_; ++k) columns_[i * dim_ + k] = Elem{v[k]};
            }
        } else {
            std::vector<Elem> v(dim_, Elem{});
            v[0] = ctx.one();
            for (std::size_t i = 1; i < dim_; ++i) {
                for (u64 s = 0; s < Q; ++s) times_x_mod(ctx, v, m);
                std::copy(v.begin(), v.end(), columns_.begin() + static_cast<std::ptrdiff_t>(i * dim_));
            }
        }
        return;
    }

    const Poly xq = powmod(Poly::x(ctx), Q, modulus_);
    Poly cur = Poly::constant(ctx, ctx.one());
    for (std::size_t i = 1; i < dim_; ++i) {
        cur = mulmod(cur, xq, modulus_);
        for (std::size_t k = 0; k < dim_; ++k) columns_[i * dim_ + k] = cur.coeff(k);
    }
}

Poly FrobeniusMap::apply(const Poly& h) const {
    const auto& ctx = modulus_.ctx();
    const Poly hr = rem(h, modulus_);
    const auto hc = hr.coeffs();
    std::vector<Elem> out(dim_, Elem{});
    if (ctx.n() == 1) {
        const u64 p = ctx.p();
        const u64 budget = accumulation_budget(p);
        std::vector<u64> acc(dim_, 0);
        u64 rows = 0;
        for (std::size_t i = 0; i < hc.size(); ++i) {
            const u64 hi = hc[i].v;
            if (hi == 0) continue;
            const Elem* col = columns_.data() + i * dim_;
            for (std::size_t k = 0; k < dim_; ++k) acc[k] += hi * col[k].v;
            if (++rows == budget) {
                for (u64& v : acc) v %= p;
                rows = 0;
            }
        }
        for (std::size_t k = 0; k < dim_; ++k) out[k] = Elem{acc[k] % p};
    } else {
        for (std::size_t i = 0; i < hc.size(); ++i) {
            if (hc[i].v == 0) continue;
            const Elem* col = columns_.data() + i * dim_;
            for (std::size_t k = 0; k < dim_; ++k) out[k] = ctx.add(out[k], ctx.mul(hc[i], col[k]));
        }
    }
    return Poly(ctx, std::move(out));
}

bool canonical_less(const Poly& f, const Poly& g) noexcept {
    if (f.degree() != g.degree()) return f.degree() < g.degree();
    const auto a = f.coeffs();
    const auto b = g.coeffs();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::uint64_t fingerprint(const Poly& f) noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](u64 v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(f.ctx().p());
    mix(f.ctx().n());
    for (u64 m : f.ctx().modulus()) mix(m);
    for (Elem c : f.coeffs()) mix(c.v);
    return h;
}

}  // namespace ecirr
