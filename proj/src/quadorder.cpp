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

#include "ecirr/quadorder.hpp"

#include "ecirr/error.hpp"

namespace ecirr {

namespace {

void require_same_order(const QuadInt& x, const QuadInt& y) {
    if (!(x.order() == y.order())) {
        fail(ErrorCode::kOrderMismatch, "elements of Q(sqrt(" + std::to_string(x.order().D()) + ")) and Q(sqrt(" +
                                            std::to_string(y.order().D()) + "))");
    }
}

bool squarefree(long v) {
    unsigned long n = static_cast<unsigned long>(v < 0 ? -v : v);
    for (unsigned long f = 2; f * f <= n; ++f) {
        if (n % (f * f) == 0) return false;
    }
    return true;
}

}  // namespace

QuadOrder QuadOrder::make(long D) {
    if (D >= 0 || !squarefree(D)) fail(ErrorCode::kInvalidArgument, "D must be negative and squarefree");
    // D mod 4 for negative D
    const long r = ((D % 4) + 4) % 4;
    if (r == 1) return QuadOrder(D, D, 1, (1 - D) / 4);
    return QuadOrder(D, 4 * D, 0, -D);
}

std::string QuadInt::to_string() const { return "(" + c0_.get_str() + ", " + c1_.get_str() + ")"; }

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
    require_same_order(x, y);
    return QuadInt(x.order(), x.c0() + y.c0(), x.c1() + y.c1());
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) {
    require_same_order(x, y);
    return QuadInt(x.order(), x.c0() - y.c0(), x.c1() - y.c1());
}

QuadInt operator-(const QuadInt& x) { return QuadInt(x.order(), -x.c0(), -x.c1()); }

QuadInt operator-(const QuadInt& x, long v) { return QuadInt(x.order(), x.c0() - v, x.c1()); }

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    require_same_order(x, y);
    const auto& o = x.order();
    // (a + b w)(c + d w) = ac - bd N + (ad + bc + bd T) w
    mpz_class bd = x.c1() * y.c1();
    mpz_class c0 = x.c0() * y.c0() - bd * o.norm_w();
    mpz_class c1 = x.c0() * y.c1() + x.c1() * y.c0();
    if (o.trace_w() != 0) c1 += bd * o.trace_w();
    return QuadInt(o, std::move(c0), std::move(c1));
}

QuadInt conj(const QuadInt& x) {
    return QuadInt(x.order(), x.c0() + x.c1() * x.order().trace_w(), -x.c1());
}

mpz_class norm(const QuadInt& x) {
    const auto& o = x.order();
    return x.c0() * x.c0() + x.c0() * x.c1() * o.trace_w() + x.c1() * x.c1() * o.norm_w();
}

mpz_class trace(const QuadInt& x) { return 2 * x.c0() + x.c1() * x.order().trace_w(); }

QuadInt pow(const QuadInt& x, std::uint64_t e) {
    QuadInt result = QuadInt::from_int(x.order(), 1);
    QuadInt base = x;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::optional<QuadInt> exact_div(const QuadInt& x, const QuadInt& y) {
    require_same_order(x, y);
    if (y.is_zero()) fail(ErrorCode::kDivisionByZero, "division by zero in the order");
    const mpz_class n = norm(y);
    QuadInt t = x * conj(y);
    if (!mpz_divisible_p(t.c0().get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(t.c1().get_mpz_t(), n.get_mpz_t())) {
        return std::nullopt;
    }
    mpz_class q0, q1;
    mpz_divexact(q0.get_mpz_t(), t.c0().get_mpz_t(), n.get_mpz_t());
    mpz_divexact(q1.get_mpz_t(), t.c1().get_mpz_t(), n.get_mpz_t());
    return QuadInt(x.order(), std::move(q0), std::move(q1));
}

namespace {

void require_split_alpha(const QuadInt& alpha) {
    const mpz_class l = norm(alpha);
    if (l <= 2 || mpz_probab_prime_p(l.get_mpz_t(), 30) == 0) {
        fail(ErrorCode::kDegenerateAlpha, "norm(alpha) = " + l.get_str() + " is not an odd prime");
    }
    if (mpz_divisible_ui_p(l.get_mpz_t(), static_cast<unsigned long>(-alpha.order().disc()))) {
        fail(ErrorCode::kDegenerateAlpha, "norm(alpha) divides the discriminant (ramified prime)");
    }
}

}  // namespace

Valuation nu_alpha(const QuadInt& beta, const QuadInt& alpha) {
    require_same_order(beta, alpha);
    require_split_alpha(alpha);
    if (beta.is_zero()) fail(ErrorCode::kInvalidArgument, "valuation of zero is infinite");
    const mpz_class l = norm(alpha);
    const QuadInt alpha_bar = conj(alpha);
    Valuation v{0, beta};
    for (;;) {
        // alpha | x  <=>  l | x * conj(alpha)
        QuadInt t = v.cofactor * alpha_bar;
        if (!mpz_divisible_p(t.c0().get_mpz_t(), l.get_mpz_t()) || !mpz_divisible_p(t.c1().get_mpz_t(), l.get_mpz_t())) {
            return v;
        }
        mpz_class q0, q1;
        mpz_divexact(q0.get_mpz_t(), t.c0().get_mpz_t(), l.get_mpz_t());
        mpz_divexact(q1.get_mpz_t(), t.c1().get_mpz_t(), l.get_mpz_t());
        v.cofactor = QuadInt(beta.order(), std::move(q0), std::move(q1));
        ++v.k;
    }
}

std::pair<QuadInt, QuadInt> frobenius_from_trace(const QuadOrder& order, long t, const mpz_class& q0) {
    const mpz_class tt = t;
    const mpz_class delta = tt * tt - 4 * q0;
    if (delta >= 0) fail(ErrorCode::kNotInOrder, "t^2 - 4q must be negative");
    const mpz_class disc = order.disc();
    if (!mpz_divisible_p(delta.get_mpz_t(), disc.get_mpz_t())) {
        fail(ErrorCode::kNotInOrder, "t^2 - 4q is not a square multiple of the discriminant");
    }
    const mpz_class ratio = delta / disc;
    if (mpz_perfect_square_p(ratio.get_mpz_t()) == 0) {
        fail(ErrorCode::kNotInOrder, "t^2 - 4q is not a square multiple of the discriminant");
    }
    mpz_class c;
    mpz_sqrt(c.get_mpz_t(), ratio.get_mpz_t());

    mpz_class c0;
    if (order.trace_w() == 1) {
        // sqrt(D) = 2w - 1:  (t + c(2w - 1))/2 = (t - c)/2 + c w
        c0 = (tt - c) / 2;
    } else {
        // sqrt(4D) = 2w:  (t + 2cw)/2 = t/2 + c w
        c0 = tt / 2;
    }
    QuadInt pi(order, c0, c);
    if (trace(pi) != tt || norm(pi) != q0) fail(ErrorCode::kInternal, "Frobenius root fails its characteristic polynomial");
    return {pi, conj(pi)};
}

std::vector<QuadInt> delta_chain(const QuadInt& pi, std::uint64_t n_exp, std::uint64_t l, unsigned depth) {
    std::vector<QuadInt> out;
    out.reserve(depth + 1);
    out.push_back(pow(pi, n_exp));
    for (unsigned i = 0; i < depth; ++i) out.push_back(pow(out.back(), l));
    return out;
}

ValLemmaReport check_val_lemma(const QuadInt& delta, const QuadInt& alpha, std::uint64_t l) {
    require_same_order(delta, alpha);
    if (norm(alpha) != l) fail(ErrorCode::kInvalidArgument, "l must equal norm(alpha)");
    ValLemmaReport rep;
    rep.values.reserve(l);
    QuadInt power = delta;
    for (std::uint64_t e = 1; e <= l; ++e) {
        const QuadInt shifted = power - 1;
        if (shifted.is_zero()) fail(ErrorCode::kInvalidArgument, "delta is a root of unity");
        rep.values.push_back(nu_alpha(shifted, alpha).k);
        if (e < l) power = power * delta;
    }
    rep.base = rep.values.front();
    rep.hypothesis_met = rep.base >= 1;
    rep.holds = true;
    for (std::uint64_t e = 1; e <= l; ++e) {
        const std::uint64_t expected = e < l ? rep.base : rep.base + 1;
        if (rep.values[e - 1] != expected) rep.holds = false;
    }
    return rep;
}

std::pair<std::uint64_t, std::uint64_t> k0_candidates(const QuadInt& pi, const QuadInt& alpha, std::uint64_t d) {
    const QuadInt rho = pow(pi, 2 * d);
    return {nu_alpha(rho - 1, alpha).k, nu_alpha(conj(rho) - 1, alpha).k};
}

}  // namespace ecirr
