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

#ifndef ECIRR_RATMAP_HPP
#define ECIRR_RATMAP_HPP

#include <optional>

#include "ecirr/poly.hpp"

namespace ecirr {

/// A point of P^1 over a field: an affine coordinate or infinity.
class ProjPoint {
public:
    static ProjPoint infinity() noexcept { return ProjPoint(); }
    static ProjPoint affine(Elem x) noexcept { return ProjPoint(x); }

    bool is_infinity() const noexcept { return !x_.has_value(); }
    /// Precondition: !is_infinity().
    Elem x() const noexcept { return *x_; }

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

private:
    ProjPoint() = default;
    explicit ProjPoint(Elem x) : x_(x) {}
    std::optional<Elem> x_;
};

/// Optional y-coordinate factor s = s_num / s_den of an endomorphism
/// (x, y) -> (r(x), y s(x)).
struct YMap {
    Poly num;
    Poly den;
};

/// r = a / b with a monic, deg b < deg a, gcd(a, b) = 1.
///
/// The printed form of a map often carries a scalar on a. make() divides both
/// a and b by lead(a) and records that scalar as normalization_unit(), so the
/// map itself (a/b) is unchanged.
class RationalMap {
public:
    /// Throws ContextMismatch, DegreeZero (deg a < 1 or b = 0), DegreeMismatch
    /// (deg b >= deg a, or l != deg a), NotCoprime (gcd(a, b) != 1).
    /// l is not required to be prime here; verify_endomorphism reports that.
    static RationalMap make(Poly a, Poly b, unsigned l, std::optional<YMap> s = std::nullopt);

    const Poly& a() const noexcept { return a_; }
    const Poly& b() const noexcept { return b_; }
    unsigned degree() const noexcept { return l_; }
    const FieldCtx& ctx() const noexcept { return a_.ctx(); }
    const std::optional<YMap>& y_map() const noexcept { return s_; }
    /// Leading coefficient the printed a carried before normalization.
    Elem normalization_unit() const noexcept { return unit_; }

    /// Same map with coefficients read in an extension field. The extension
    /// must share the characteristic; coefficients are taken from the prime
    /// subfield, so the source map must be defined over F_p.
    RationalMap lift_to(const FieldCtx& ext) const;

private:
    RationalMap(Poly a, Poly b, unsigned l, std::optional<YMap> s, Elem unit)
        : a_(std::move(a)), b_(std::move(b)), l_(l), s_(std::move(s)), unit_(unit) {}

    Poly a_;
    Poly b_;
    unsigned l_;
    std::optional<YMap> s_;
    Elem unit_;
};

/// Affine x -> a(x)/b(x), or infinity at a pole; infinity is fixed.
ProjPoint map_eval(const RationalMap& m, ProjPoint pt);

/// k-fold application of map_eval, k >= 1.
ProjPoint map_iterate(const RationalMap& m, u64 k, ProjPoint pt);

/// g^r = b^{deg g} g(a/b) = sum_k g_k a^k b^{deg g - k}.
///
/// Computed by the Horner recurrence h <- h a + g_k b^{deg g - k}, which never
/// leaves the polynomial ring. deg g^r = l deg g and g^r is monic when g is.
/// Throws DegreeZero for deg g < 1, ContextMismatch.
Poly r_transform(const Poly& g, const RationalMap& m);

}  // namespace ecirr

#endif  // ECIRR_RATMAP_HPP
