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

// Irreducibility testing and factorization over F_Q, Q = p^n:
// squarefree decomposition, distinct-degree factorization, then
// Cantor-Zassenhaus equal-degree splitting.

#include <algorithm>

#include "ecirr/error.hpp"
#include "ecirr/poly.hpp"

namespace ecirr {

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) fail(ErrorCode::kDegreeZero, "irreducibility of a constant");
    if (f.degree() == 1) return true;
    const Poly g = monic(f);
    const auto& ctx = g.ctx();
    const u64 deg = static_cast<u64>(g.degree());

    std::vector<u64> checkpoints;
    for (u64 ell : prime_divisors(deg)) checkpoints.push_back(deg / ell);

    const FrobeniusMap frob(g);
    const Poly x = Poly::x(ctx);
    Poly h = x;
    for (u64 k = 1; k <= deg; ++k) {
        h = frob.apply(h);
        if (std::find(checkpoints.begin(), checkpoints.end(), k) != checkpoints.end()) {
            if (!gcd(h - x, g).is_one()) return false;
        }
    }
    return h == rem(x, g);
}

bool is_irreducible_trial_division(const Poly& f) {
    if (f.degree() < 1) fail(ErrorCode::kDegreeZero, "irreducibility of a constant");
    const auto& ctx = f.ctx();
    const u64 q = ctx.order();
    for (int k = 1; 2 * k <= f.degree(); ++k) {
        u64 count = 1;
        for (int i = 0; i < k; ++i) count *= q;
        for (u64 idx = 0; idx < count; ++idx) {
            std::vector<Elem> c(static_cast<std::size_t>(k) + 1);
            u64 rest = idx;
            for (int i = 0; i < k; ++i) {
                c[static_cast<std::size_t>(i)] = Elem{rest % q};
                rest /= q;
            }
            c[static_cast<std::size_t>(k)] = ctx.one();
            if (rem(f, Poly(ctx, std::move(c))).is_zero()) return false;
        }
    }
    return true;
}

Poly Factorization::expand(const FieldCtx& ctx) const {
    Poly out = Poly::constant(ctx, unit);
    for (const auto& e : factors) {
        for (unsigned i = 0; i < e.multiplicity; ++i) out = out * e.factor;
    }
    return out;
}

namespace {

// f = sum c_{ip} x^{ip}  ->  sum c_{ip}^{1/p} x^i; c^{1/p} = c^{p^{n-1}}.
Poly pth_root(const Poly& f) {
    const auto& ctx = f.ctx();
    const u64 p = ctx.p();
    std::vector<Elem> out(static_cast<std::size_t>(f.degree()) / p + 1);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Elem c = f.coeff(i * p);
        for (unsigned k = 1; k < ctx.n(); ++k) c = ctx.pow(c, p);
        out[i] = c;
    }
    return Poly(ctx, std::move(out));
}

void squarefree_into(const Poly& f, unsigned scale_mult, std::vector<FactorEntry>& out) {
    if (f.degree() < 1) return;
    const Poly df = derivative(f);
    if (df.is_zero()) {
        squarefree_into(pth_root(f), scale_mult * static_cast<unsigned>(f.ctx().p()), out);
        return;
    }
    Poly c = gcd(f, df);
    Poly w = exact_quotient(f, c);
    unsigned i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly z = exact_quotient(w, y);
        if (z.degree() > 0) out.push_back({z, i * scale_mult});
        ++i;
        w = std::move(y);
        c = exact_quotient(c, w);
    }
    if (c.degree() > 0) squarefree_into(pth_root(c), scale_mult * static_cast<unsigned>(f.ctx().p()), out);
}

Poly random_poly_below(const FieldCtx& ctx, int degree_bound, Rng& rng) {
    std::vector<Elem> c(static_cast<std::size_t>(degree_bound));
    for (Elem& e : c) e = ctx.random(rng);
    return Poly(ctx, std::move(c));
}

void split_equal_degree(const Poly& g, unsigned k, const FrobeniusMap& frob, Rng& rng, std::vector<Poly>& out) {
    if (g.degree() == static_cast<int>(k)) {
        out.push_back(g);
        return;
    }
    const auto& ctx = g.ctx();
    const Poly one = Poly::constant(ctx, ctx.one());
    for (int attempt = 0; attempt < kEqualDegreeRetryCap; ++attempt) {
        const Poly a = random_poly_below(ctx, g.degree(), rng);
        if (a.degree() < 1) continue;
        // a^((Q^k - 1) / 2) = (a * a^Q * ... * a^(Q^(k-1)))^((Q - 1) / 2)
        Poly b = a;
        Poly acc = a;
        for (unsigned i = 1; i < k; ++i) {
            b = rem(frob.apply(b), g);
            acc = mulmod(acc, b, g);
        }
        const Poly t = powmod(acc, (ctx.order() - 1) / 2, g);
        const Poly d = gcd(t - one, g);
        if (d.degree() > 0 && d.degree() < g.degree()) {
            split_equal_degree(d, k, frob, rng, out);
            split_equal_degree(exact_quotient(g, d), k, frob, rng, out);
            return;
        }
    }
    fail(ErrorCode::kFactorizationFailed,
         "equal-degree splitting made no progress after " + std::to_string(kEqualDegreeRetryCap) + " attempts");
}

}  // namespace

std::vector<FactorEntry> squarefree_decomposition(const Poly& f) {
    std::vector<FactorEntry> out;
    squarefree_into(monic(f), 1, out);
    return out;
}

std::vector<std::pair<Poly, unsigned>> distinct_degree_factorization(const Poly& f) {
    std::vector<std::pair<Poly, unsigned>> out;
    if (f.degree() < 1) return out;
    const Poly g = monic(f);
    const auto& ctx = g.ctx();
    const Poly x = Poly::x(ctx);
    const FrobeniusMap frob(g);
    Poly rest = g;
    Poly h = x;
    for (unsigned k = 1; 2 * static_cast<int>(k) <= rest.degree(); ++k) {
        h = frob.apply(h);
        Poly d = gcd(rem(h - x, rest), rest);
        if (!d.is_one()) {
            rest = exact_quotient(rest, d);
            out.emplace_back(std::move(d), k);
        }
    }
    if (rest.degree() > 0) {
        const unsigned k = static_cast<unsigned>(rest.degree());
        out.emplace_back(std::move(rest), k);
    }
    return out;
}

std::vector<Poly> equal_degree_factorization(const Poly& f, unsigned k, Rng& rng) {
    std::vector<Poly> out;
    const Poly g = monic(f);
    if (g.degree() < 1) return out;
    if (k == 0 || g.degree() % static_cast<int>(k) != 0) {
        fail(ErrorCode::kInvalidArgument, "degree is not a multiple of the factor degree");
    }
    if (g.degree() == static_cast<int>(k)) {
        out.push_back(g);
        return out;
    }
    const FrobeniusMap frob(g);
    split_equal_degree(g, k, frob, rng, out);
    return out;
}

Factorization factor(const Poly& f, u64 seed) {
    if (f.degree() < 1) fail(ErrorCode::kDegreeZero, "factorization of a constant");
    Factorization result{f.lead(), {}};
    Rng rng(seed);
    std::vector<FactorEntry> raw;
    for (const auto& part : squarefree_decomposition(f)) {
        for (const auto& [prod, k] : distinct_degree_factorization(part.factor)) {
            for (Poly& irr : equal_degree_factorization(prod, k, rng)) {
                raw.push_back({std::move(irr), part.multiplicity});
            }
        }
    }
    std::sort(raw.begin(), raw.end(),
              [](const FactorEntry& a, const FactorEntry& b) { return canonical_less(a.factor, b.factor); });
    for (auto& e : raw) {
        if (!result.factors.empty() && result.factors.back().factor == e.factor) {
            result.factors.back().multiplicity += e.multiplicity;
        } else {
            result.factors.push_back(std::move(e));
        }
    }
    return result;
}

Poly first_irreducible(const FieldCtx& ctx, unsigned degree) {
    if (degree == 0) fail(ErrorCode::kDegreeZero, "degree must be positive");
    std::vector<Elem> c(degree + 1, Elem{0});
    c[degree] = ctx.one();
    const u64 q = ctx.order();
    for (;;) {
        Poly f(ctx, c);
        if (is_irreducible(f)) return f;
        std::size_t k = 0;
        while (k < degree && ++c[k].v == q) c[k++].v = 0;
        if (k == degree) fail(ErrorCode::kInternal, "no irreducible polynomial found");
    }
}

FieldCtx standard_extension(u64 p, unsigned n) {
    const FieldCtx fp = FieldCtx::prime(p);
    if (n == 1) return fp;
    const Poly m = first_irreducible(fp, n);
    std::vector<i64> coeffs;
    for (Elem e : m.coeffs()) coeffs.push_back(static_cast<i64>(e.v));
    return FieldCtx::make(p, n, coeffs);
}

}  // namespace ecirr
