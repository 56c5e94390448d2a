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

#ifndef ECIRR_POLY_HPP
#define ECIRR_POLY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ecirr/ff.hpp"

namespace ecirr {

/// Dense univariate polynomial over a FieldCtx, little-endian coefficients.
///
/// The coefficient vector never carries a zero leading entry; the zero
/// polynomial is the empty vector and reports degree kZeroDegree.
class Poly {
public:
    /// Stand-in for the degree of the zero polynomial (minus infinity).
    static constexpr int kZeroDegree = -1;

    explicit Poly(FieldCtx ctx) : ctx_(std::move(ctx)) {}
    Poly(FieldCtx ctx, std::vector<Elem> coeffs);

    /// Integers are mapped into the prime subfield (negative values allowed).
    static Poly from_ints(const FieldCtx& ctx, std::span<const i64> coeffs);
    static Poly constant(const FieldCtx& ctx, Elem c);
    /// c * x^k
    static Poly monomial(const FieldCtx& ctx, Elem c, std::size_t k);
    static Poly x(const FieldCtx& ctx) { return monomial(ctx, ctx.one(), 1); }

    const FieldCtx& ctx() const noexcept { return ctx_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == ctx_.one(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == ctx_.one(); }
    /// Leading coefficient; zero for the zero polynomial.
    Elem lead() const noexcept { return c_.empty() ? Elem{} : c_.back(); }
    Elem coeff(std::size_t k) const noexcept { return k < c_.size() ? c_[k] : Elem{}; }
    std::span<const Elem> coeffs() const noexcept { return c_; }

    Elem eval(Elem x) const noexcept;

    friend bool operator==(const Poly& a, const Poly& b) noexcept { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }

    std::string to_string() const;

private:
    void normalize() noexcept;

    FieldCtx ctx_;
    std::vector<Elem> c_;
};

Poly operator+(const Poly& f, const Poly& g);
Poly operator-(const Poly& f, const Poly& g);
Poly operator-(const Poly& f);
Poly operator*(const Poly& f, const Poly& g);
Poly scale(const Poly& f, Elem c);
/// f * x^k
Poly shift(const Poly& f, std::size_t k);

/// f = q*g + r with deg r < deg g. Throws DivisionByZero for g = 0.
std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);
Poly rem(const Poly& f, const Poly& g);
/// Exact quotient; throws NotDivisible when g does not divide f.
Poly exact_quotient(const Poly& f, const Poly& g);
/// Divides by the leading coefficient; zero stays zero.
Poly monic(const Poly& f);
Poly derivative(const Poly& f);
/// Monic gcd. Throws BothZero when f = g = 0.
Poly gcd(const Poly& f, const Poly& g);
Poly mulmod(const Poly& f, const Poly& g, const Poly& m);
/// f^e mod m by square-and-multiply; requires deg m >= 1.
Poly powmod(const Poly& f, u64 e, const Poly& m);
/// g(h(x)) mod m
Poly compose_mod(const Poly& g, const Poly& h, const Poly& m);

/// The F_Q-linear map h -> h^Q mod f (Q = field order), tabulated as the
/// matrix whose i-th column is x^(iQ) mod f. Building costs O(min(Q, deg f)
/// * deg f^2) field operations; each application is one matrix-vector product.
class FrobeniusMap {
public:
    /// deg modulus >= 1.
    explicit FrobeniusMap(const Poly& modulus);

    const Poly& modulus() const noexcept { return modulus_; }
    /// h^Q mod modulus.
    Poly apply(const Poly& h) const;

private:
    Poly modulus_;
    std::size_t dim_;
    std::vector<Elem> columns_;  // dim_ columns of dim_ entries each
};

/// Rabin test over the coefficient field. Throws DegreeZero for deg f < 1.
bool is_irreducible(const Poly& f);

/// Exhaustive test oracle: trial division by every monic polynomial of
/// degree 1..deg f / 2. Only for tiny fields and degrees.
bool is_irreducible_trial_division(const Poly& f);

struct FactorEntry {
    Poly factor;  // monic irreducible
    unsigned multiplicity;
};

/// unit * prod factor^multiplicity, factors in canonical order.
struct Factorization {
    Elem unit;
    std::vector<FactorEntry> factors;

    Poly expand(const FieldCtx& ctx) const;
};

/// Canonical order: degree ascending, then little-endian coefficient vectors
/// compared lexicographically by packed value.
bool canonical_less(const Poly& f, const Poly& g) noexcept;

/// Squarefree decomposition of a monic polynomial: pairwise coprime
/// squarefree parts with their multiplicities.
std::vector<FactorEntry> squarefree_decomposition(const Poly& f);

/// For a monic squarefree f: pairs (product of all irreducible factors of
/// degree k, k), k ascending.
std::vector<std::pair<Poly, unsigned>> distinct_degree_factorization(const Poly& f);

/// Cantor-Zassenhaus splitting of a monic squarefree f whose irreducible
/// factors all have degree k. Gives up with FactorizationFailed after
/// kEqualDegreeRetryCap unproductive attempts on one factor.
inline constexpr int kEqualDegreeRetryCap = 64;
std::vector<Poly> equal_degree_factorization(const Poly& f, unsigned k, Rng& rng);

/// Complete factorization. The PRNG seed only drives equal-degree splitting;
/// the canonical output is independent of it. Throws DegreeZero for deg f < 1.
Factorization factor(const Poly& f, u64 seed = 0);

/// Lexicographically first monic irreducible polynomial of the given degree
/// (constant term varying fastest). Throws DegreeZero for degree 0.
Poly first_irreducible(const FieldCtx& ctx, unsigned degree);

/// F_{p^n} defined by first_irreducible over F_p.
FieldCtx standard_extension(u64 p, unsigned n);

/// 64-bit FNV-1a digest of the field parameters and coefficients.
std::uint64_t fingerprint(const Poly& f) noexcept;

}  // namespace ecirr

#endif  // ECIRR_POLY_HPP
