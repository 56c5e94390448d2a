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

#ifndef ECIRR_QUADORDER_HPP
#define ECIRR_QUADORDER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ecirr {

/// Maximal order of Q(sqrt(D)), D < 0 squarefree, with Z-basis (1, w):
/// w = (1 + sqrt(D))/2 when D = 1 mod 4, w = sqrt(D) otherwise.
/// w satisfies w^2 = trace_w * w - norm_w.
class QuadOrder {
public:
    /// Throws InvalidArgument unless D is negative and squarefree.
    static QuadOrder make(long D);

    long D() const noexcept { return D_; }
    /// Field discriminant: D or 4D.
    long disc() const noexcept { return disc_; }
    long trace_w() const noexcept { return trace_w_; }
    long norm_w() const noexcept { return norm_w_; }

    friend bool operator==(const QuadOrder& a, const QuadOrder& b) noexcept { return a.D_ == b.D_; }

private:
    QuadOrder(long D, long disc, long tw, long nw) : D_(D), disc_(disc), trace_w_(tw), norm_w_(nw) {}
    long D_;
    long disc_;
    long trace_w_;
    long norm_w_;
};

/// c0 + c1 w in a QuadOrder, arbitrary-precision coordinates.
class QuadInt {
public:
    QuadInt(QuadOrder order, mpz_class c0, mpz_class c1)
        : order_(order), c0_(std::move(c0)), c1_(std::move(c1)) {}
    static QuadInt from_int(QuadOrder order, long v) { return QuadInt(order, v, 0); }

    const QuadOrder& order() const noexcept { return order_; }
    const mpz_class& c0() const noexcept { return c0_; }
    const mpz_class& c1() const noexcept { return c1_; }
    bool is_zero() const noexcept { return c0_ == 0 && c1_ == 0; }

    friend bool operator==(const QuadInt& a, const QuadInt& b) {
        return a.order_ == b.order_ && a.c0_ == b.c0_ && a.c1_ == b.c1_;
    }

    /// "(c0, c1)"
    std::string to_string() const;

private:
    QuadOrder order_;
    mpz_class c0_;
    mpz_class c1_;
};

// Binary operations throw OrderMismatch across orders.
QuadInt operator+(const QuadInt& x, const QuadInt& y);
QuadInt operator-(const QuadInt& x, const QuadInt& y);
QuadInt operator-(const QuadInt& x);
QuadInt operator*(const QuadInt& x, const QuadInt& y);
QuadInt operator-(const QuadInt& x, long v);
QuadInt conj(const QuadInt& x);
mpz_class norm(const QuadInt& x);
mpz_class trace(const QuadInt& x);
QuadInt pow(const QuadInt& x, std::uint64_t e);

/// q with q y = x, or nullopt when y does not divide x in the order.
/// Throws DivisionByZero for y = 0.
std::optional<QuadInt> exact_div(const QuadInt& x, const QuadInt& y);

struct Valuation {
    std::uint64_t k;
    QuadInt cofactor;  // beta / alpha^k, not divisible by alpha
};

/// alpha-adic valuation of beta.
///
/// alpha must have odd prime norm l with l coprime to the discriminant, so
/// that l splits and alpha generates a prime of degree one (DegenerateAlpha
/// otherwise). beta = 0 is an InvalidArgument.
Valuation nu_alpha(const QuadInt& beta, const QuadInt& alpha);

/// Both roots of z^2 - t z + q0 = 0 in the order, (t + c sqrt(disc))/2 with
/// c >= 0 first. Throws NotInOrder unless t^2 - 4 q0 = c^2 disc < 0.
std::pair<QuadInt, QuadInt> frobenius_from_trace(const QuadOrder& order, long t, const mpz_class& q0);

/// [pi^n_exp, (pi^n_exp)^l, ..., (pi^n_exp)^(l^depth)]
std::vector<QuadInt> delta_chain(const QuadInt& pi, std::uint64_t n_exp, std::uint64_t l, unsigned depth);

struct ValLemmaReport {
    std::uint64_t base = 0;             // nu_alpha(delta - 1)
    std::vector<std::uint64_t> values;  // nu_alpha(delta^e - 1), e = 1..l
    bool hypothesis_met = false;        // alpha divides delta - 1
    bool holds = false;
};

/// Computes nu_alpha(delta^e - 1) for e = 1..l and checks that it equals
/// nu_alpha(delta - 1) for e < l and nu_alpha(delta - 1) + 1 for e = l.
/// The identity needs alpha | delta - 1; without it delta^l = delta mod alpha
/// and the e = l case fails, which `holds` reports as is.
/// Requires l = norm(alpha).
ValLemmaReport check_val_lemma(const QuadInt& delta, const QuadInt& alpha, std::uint64_t l);

/// nu_alpha(pi^(2d) - 1) for pi and for conj(pi): the two candidates for k_0.
std::pair<std::uint64_t, std::uint64_t> k0_candidates(const QuadInt& pi, const QuadInt& alpha, std::uint64_t d);

}  // namespace ecirr

#endif  // ECIRR_QUADORDER_HPP
