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

#ifndef ECIRR_FF_HPP
#define ECIRR_FF_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace ecirr {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Seeded generator used everywhere randomness is needed.
using Rng = std::mt19937_64;

inline constexpr u64 kDefaultEnumerationCap = 1'000'000;

/// Enumeration cap for brute-force paths: ECIRR_ENUM_CAP if set and valid,
/// otherwise kDefaultEnumerationCap.
u64 enumeration_cap();

/// Field element in packed form.
///
/// The power-basis coordinates (c_0, ..., c_{n-1}) of an element of
/// F_p[t]/(m(t)) are stored as the integer c_0 + c_1 p + ... + c_{n-1} p^{n-1}.
/// The encoding is canonical: equal elements have equal packed values, and
/// for prime fields the packed value is the residue itself.
struct Elem {
    u64 v = 0;

    friend auto operator<=>(const Elem&, const Elem&) = default;
};

/// The finite field F_{p^n} presented as F_p[t]/(m(t)).
///
/// Immutable after construction; copies share the same underlying data.
/// Requires p < 2^32 and p^n < 2^62 so that packed elements and the point at
/// infinity of P^1 fit in 64 bits.
class FieldCtx {
public:
    /// Throws NotPrime (p not an odd prime), DegreeMismatch (modulus length or
    /// monicity), ReducibleModulus, FieldTooLarge (outside the packed range).
    static FieldCtx make(u64 p, unsigned n, std::span<const i64> modulus);
    static FieldCtx prime(u64 p);

    u64 p() const noexcept;
    unsigned n() const noexcept;
    /// p^n
    u64 order() const noexcept;
    /// Monic modulus, little-endian, length n + 1 (for n = 1 this is t).
    const std::vector<u64>& modulus() const noexcept;

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept;

    Elem zero() const noexcept { return Elem{0}; }
    Elem one() const noexcept { return Elem{1}; }
    /// Image of an integer in the prime subfield.
    Elem from_int(i64 value) const noexcept;
    /// Throws InvalidArgument if more than n coordinates or an entry >= p.
    Elem from_coeffs(std::span<const u64> coeffs) const;
    /// Exactly n coordinates.
    std::vector<u64> coeffs(Elem x) const;
    bool contains(Elem x) const noexcept { return x.v < order(); }

    Elem add(Elem x, Elem y) const noexcept;
    Elem sub(Elem x, Elem y) const noexcept;
    Elem neg(Elem x) const noexcept;
    Elem mul(Elem x, Elem y) const noexcept;
    Elem sqr(Elem x) const noexcept { return mul(x, x); }
    /// Throws DivisionByZero for x = 0.
    Elem inv(Elem x) const;
    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
    /// Square-and-multiply; pow(x, 0) = 1 for every x including 0.
    Elem pow(Elem x, u64 e) const noexcept;

    /// Euler's criterion: 1 for nonzero squares, -1 for non-squares, 0 for 0.
    int quadratic_character(Elem x) const noexcept;
    /// Tonelli-Shanks; nullopt when x is not a square.
    std::optional<Elem> sqrt(Elem x) const;
    /// True iff x lies in F_{p^k}, i.e. x^(p^k) = x.
    bool in_subfield(Elem x, unsigned k) const noexcept;

    Elem random(Rng& rng) const;
    Elem random_nonzero(Rng& rng) const;

    /// All p^n elements in increasing packed order. Throws FieldTooLarge when
    /// p^n exceeds cap.
    std::vector<Elem> enumerate(u64 cap = enumeration_cap()) const;

    /// "17" for prime fields, "[3,0,1]" style coordinate list otherwise.
    std::string to_string(Elem x) const;

private:
    struct Data;
    explicit FieldCtx(std::shared_ptr<const Data> data) : d_(std::move(data)) {}
    std::shared_ptr<const Data> d_;
};

u64 mod_pow(u64 base, u64 exp, u64 mod) noexcept;
bool is_prime_u64(u64 n) noexcept;
/// Distinct prime divisors in increasing order.
std::vector<u64> prime_divisors(u64 n);

}  // namespace ecirr

#endif  // ECIRR_FF_HPP
