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

#include "ecirr/ff.hpp"

#include <array>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "ecirr/error.hpp"
#include "ecirr/poly.hpp"

namespace ecirr {

namespace {

constexpr unsigned kMaxExtensionDegree = 40;  // 3^40 > 2^62
constexpr u64 kMaxOrder = u64{1} << 62;

using Digits = std::array<u64, 2 * kMaxExtensionDegree>;

u64 mul_mod_u128(u64 a, u64 b, u64 m) noexcept {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

}  // namespace

struct FieldCtx::Data {
    u64 p = 0;
    unsigned n = 1;
    u64 order = 0;
    std::vector<u64> modulus;
    Elem nonresidue;

    void unpack(u64 x, u64* out) const noexcept {
        for (unsigned i = 0; i < n; ++i) {
            out[i] = x % p;
            x /= p;
        }
    }

    u64 pack(const u64* digits) const noexcept {
        u64 v = 0;
        for (unsigned i = n; i-- > 0;) v = v * p + digits[i];
        return v;
    }
};

u64 enumeration_cap() {
    if (const char* env = std::getenv("ECIRR_ENUM_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<u64>(v);
    }
    return kDefaultEnumerationCap;
}

u64 mod_pow(u64 base, u64 exp, u64 mod) noexcept {
    if (mod == 1) return 0;
    u64 result = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) result = mul_mod_u128(result, base, mod);
        base = mul_mod_u128(base, base, mod);
        exp >>= 1;
    }
    return result;
}

bool is_prime_u64(u64 n) noexcept {
    if (n < 2) return false;
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for 64-bit inputs.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod_u128(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (u64 f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

FieldCtx FieldCtx::make(u64 p, unsigned n, std::span<const i64> modulus) {
    if (p == 2 || !is_prime_u64(p)) fail(ErrorCode::kNotPrime, std::to_string(p) + " is not an odd prime");
    if (p > std::numeric_limits<std::uint32_t>::max()) {
        fail(ErrorCode::kFieldTooLarge, "characteristic must be below 2^32");
    }
    if (n == 0) fail(ErrorCode::kDegreeMismatch, "extension degree must be positive");
    if (n > kMaxExtensionDegree) fail(ErrorCode::kFieldTooLarge, "extension degree too large");
    u64 order = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (order > kMaxOrder / p) fail(ErrorCode::kFieldTooLarge, "p^n must be below 2^62");
        order *= p;
    }

    auto data = std::make_shared<Data>();
    data->p = p;
    data->n = n;
    data->order = order;
    if (n == 1) {
        data->modulus = {0, 1};
    } else {
        if (modulus.size() != n + 1) {
            fail(ErrorCode::kDegreeMismatch, "modulus must have n + 1 coefficients");
        }
        data->modulus.resize(n + 1);
        const i64 sp = static_cast<i64>(p);
        for (unsigned i = 0; i <= n; ++i) data->modulus[i] = static_cast<u64>(((modulus[i] % sp) + sp) % sp);
        if (data->modulus[n] != 1) fail(ErrorCode::kDegreeMismatch, "modulus must be monic of degree n");

        FieldCtx base = prime(p);
        std::vector<Elem> mc;
        for (u64 c : data->modulus) mc.push_back(Elem{c});
        if (!is_irreducible(Poly(base, std::move(mc)))) {
            fail(ErrorCode::kReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
        }
    }

    FieldCtx ctx(data);
    // Every odd-order field has a non-residue; scan packed values upward.
    for (u64 v = 2; v < order; ++v) {
        if (ctx.quadratic_character(Elem{v}) == -1) {
            data->nonresidue = Elem{v};
            break;
        }
    }
    return ctx;
}

FieldCtx FieldCtx::prime(u64 p) {
    const i64 m[2] = {0, 1};
    return make(p, 1, m);
}

u64 FieldCtx::p() const noexcept { return d_->p; }
unsigned FieldCtx::n() const noexcept { return d_->n; }
u64 FieldCtx::order() const noexcept { return d_->order; }
const std::vector<u64>& FieldCtx::modulus() const noexcept { return d_->modulus; }

bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept {
    if (a.d_ == b.d_) return true;
    return a.d_->p == b.d_->p && a.d_->n == b.d_->n && a.d_->modulus == b.d_->modulus;
}

Elem FieldCtx::from_int(i64 value) const noexcept {
    const i64 sp = static_cast<i64>(d_->p);
    return Elem{static_cast<u64>(((value % sp) + sp) % sp)};
}

Elem FieldCtx::from_coeffs(std::span<const u64> coeffs) const {
    if (coeffs.size() > d_->n) fail(ErrorCode::kInvalidArgument, "too many coordinates for field element");
    Digits digits{};
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] >= d_->p) fail(ErrorCode::kInvalidArgument, "coordinate out of range [0, p)");
        digits[i] = coeffs[i];
    }
    return Elem{d_->pack(digits.data())};
}

std::vector<u64> FieldCtx::coeffs(Elem x) const {
    std::vector<u64> out(d_->n);
    d_->unpack(x.v, out.data());
    return out;
}

Elem FieldCtx::add(Elem x, Elem y) const noexcept {
    const u64 p = d_->p;
    if (d_->n == 1) {
        u64 s = x.v + y.v;
        return Elem{s >= p ? s - p : s};
    }
    Digits a{}, b{};
    d_->unpack(x.v, a.data());
    d_->unpack(y.v, b.data());
    for (unsigned i = 0; i < d_->n; ++i) {
        a[i] += b[i];
        if (a[i] >= p) a[i] -= p;
    }
    return Elem{d_->pack(a.data())};
}

Elem FieldCtx::neg(Elem x) const noexcept {
    const u64 p = d_->p;
    if (d_->n == 1) return Elem{x.v == 0 ? 0 : p - x.v};
    Digits a{};
    d_->unpack(x.v, a.data());
    for (unsigned i = 0; i < d_->n; ++i) a[i] = a[i] == 0 ? 0 : p - a[i];
    return Elem{d_->pack(a.data())};
}

Elem FieldCtx::sub(Elem x, Elem y) const noexcept { return add(x, neg(y)); }

Elem FieldCtx::mul(Elem x, Elem y) const noexcept {
    const u64 p = d_->p;
    if (d_->n == 1) return Elem{(x.v * y.v) % p};
    const unsigned n = d_->n;
    Digits a{}, b{}, t{};
    d_->unpack(x.v, a.data());
    d_->unpack(y.v, b.data());
    for (unsigned i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < n; ++j) t[i + j] = (t[i + j] + a[i] * b[j]) % p;
    }
    const auto& m = d_->modulus;
    for (unsigned i = 2 * n - 2; i >= n; --i) {
        const u64 c = t[i];
        if (c == 0) continue;
        t[i] = 0;
        for (unsigned j = 0; j < n; ++j) t[i - n + j] = (t[i - n + j] + c * (p - m[j])) % p;
    }
    return Elem{d_->pack(t.data())};
}

Elem FieldCtx::pow(Elem x, u64 e) const noexcept {
    Elem result = one();
    while (e) {
        if (e & 1) result = mul(result, x);
        x = mul(x, x);
        e >>= 1;
    }
    return result;
}

Elem FieldCtx::inv(Elem x) const {
    if (x.v == 0) fail(ErrorCode::kDivisionByZero, "inverse of zero");
    if (d_->n == 1) {
        // Extended Euclid on residues.
        i64 r0 = static_cast<i64>(d_->p), r1 = static_cast<i64>(x.v);
        i64 s0 = 0, s1 = 1;
        while (r1 != 0) {
            const i64 q = r0 / r1;
            i64 tmp = r0 - q * r1;
            r0 = r1;
            r1 = tmp;
            tmp = s0 - q * s1;
            s0 = s1;
            s1 = tmp;
        }
        return from_int(s0);
    }
    return pow(x, d_->order - 2);
}

int FieldCtx::quadratic_character(Elem x) const noexcept {
    if (x.v == 0) return 0;
    return pow(x, (d_->order - 1) / 2) == one() ? 1 : -1;
}

std::optional<Elem> FieldCtx::sqrt(Elem x) const {
    if (x.v == 0) return zero();
    if (quadratic_character(x) != 1) return std::nullopt;
    u64 q = d_->order - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    Elem c = pow(d_->nonresidue, q);
    Elem r = pow(x, (q + 1) / 2);
    Elem t = pow(x, q);
    unsigned m = s;
    while (t != one()) {
        unsigned i = 0;
        Elem t2 = t;
        while (t2 != one()) {
            t2 = sqr(t2);
            ++i;
        }
        Elem b = c;
        for (unsigned k = 0; k + i + 1 < m; ++k) b = sqr(b);
        r = mul(r, b);
        c = sqr(b);
        t = mul(t, c);
        m = i;
    }
    return r;
}

bool FieldCtx::in_subfield(Elem x, unsigned k) const noexcept {
    Elem y = x;
    for (unsigned i = 0; i < k; ++i) y = pow(y, d_->p);
    return y == x;
}

Elem FieldCtx::random(Rng& rng) const {
    std::uniform_int_distribution<u64> dist(0, d_->order - 1);
    return Elem{dist(rng)};
}

Elem FieldCtx::random_nonzero(Rng& rng) const {
    std::uniform_int_distribution<u64> dist(1, d_->order - 1);
    return Elem{dist(rng)};
}

std::vector<Elem> FieldCtx::enumerate(u64 cap) const {
    if (d_->order > cap) {
        fail(ErrorCode::kFieldTooLarge,
             "field of order " + std::to_string(d_->order) + " exceeds enumeration cap " + std::to_string(cap));
    }
    std::vector<Elem> out(d_->order);
    for (u64 v = 0; v < d_->order; ++v) out[v] = Elem{v};
    return out;
}

std::string FieldCtx::to_string(Elem x) const {
    if (d_->n == 1) return std::to_string(x.v);
    std::ostringstream os;
    os << '[';
    auto c = coeffs(x);
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ']';
    return os.str();
}

}  // namespace ecirr
