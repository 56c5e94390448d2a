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

#ifndef ECIRR_CURVE_HPP
#define ECIRR_CURVE_HPP

#include <string>
#include <vector>

#include "ecirr/ratmap.hpp"

namespace ecirr {

/// y^2 = x^3 + A x + B over an odd-characteristic field.
class Curve {
public:
    /// Throws SingularCurve when 4A^3 + 27B^2 = 0.
    static Curve make(FieldCtx ctx, Elem A, Elem B);

    const FieldCtx& ctx() const noexcept { return ctx_; }
    Elem A() const noexcept { return A_; }
    Elem B() const noexcept { return B_; }

    /// x^3 + A x + B
    Elem rhs(Elem x) const noexcept;
    /// Same equation over an extension of the prime field (A, B must lie in F_p).
    Curve lift_to(const FieldCtx& ext) const;

private:
    Curve(FieldCtx ctx, Elem A, Elem B) : ctx_(std::move(ctx)), A_(A), B_(B) {}
    FieldCtx ctx_;
    Elem A_;
    Elem B_;
};

class CurvePoint {
public:
    static CurvePoint identity() noexcept { return CurvePoint(); }
    static CurvePoint affine(Elem x, Elem y) noexcept { return CurvePoint(x, y); }

    bool is_identity() const noexcept { return identity_; }
    Elem x() const noexcept { return x_; }
    Elem y() const noexcept { return y_; }

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

private:
    CurvePoint() = default;
    CurvePoint(Elem x, Elem y) : identity_(false), x_(x), y_(y) {}
    bool identity_ = true;
    Elem x_{};
    Elem y_{};
};

bool on_curve(const Curve& c, const CurvePoint& P) noexcept;
CurvePoint point_neg(const Curve& c, const CurvePoint& P);
/// Chord-tangent addition. Throws PointNotOnCurve.
CurvePoint point_add(const Curve& c, const CurvePoint& P, const CurvePoint& Q);
/// Double-and-add; negative k uses -P. Throws PointNotOnCurve.
CurvePoint scalar_mul(const Curve& c, i64 k, const CurvePoint& P);
/// Uniform x with a square right-hand side, random sign of y.
CurvePoint random_point(const Curve& c, Rng& rng);
/// All affine points plus the identity (identity first). Throws FieldTooLarge.
std::vector<CurvePoint> enumerate_points(const Curve& c, u64 cap = enumeration_cap());

struct CurveOrderData {
    u64 count;  // #E(F_{p^n})
    i64 trace;  // p^n + 1 - count
};

/// Brute force over x with the quadratic character from Euler's criterion.
/// Throws FieldTooLarge.
CurveOrderData count_points(const Curve& c, u64 cap = enumeration_cap());
/// t != 0 mod p.
bool is_ordinary(const Curve& c, u64 cap = enumeration_cap());

struct EndomorphismReport {
    bool exhaustive = false;
    u64 points_checked = 0;
    u64 x_failures = 0;
    bool degree_ok = false;
    std::string degree_detail;
    bool y_map_checked = false;
    u64 y_points_checked = 0;
    u64 y_not_on_curve = 0;
    u64 pairs_checked = 0;
    u64 additivity_failures = 0;
    u64 max_fiber = 0;  // largest fiber of r over P^1 (exhaustive mode only)

    bool x_compatible() const noexcept { return x_failures == 0 && points_checked > 0; }
    bool passed() const noexcept {
        return degree_ok && x_compatible() && y_not_on_curve == 0 && additivity_failures == 0;
    }
};

/// Checks that m is the x-part of an endomorphism of c.
///
/// x-compatibility: for every point (x, y) of c (all of them when the field is
/// enumerable under cap, else `samples` random points), r(x) is infinity or
/// the abscissa of a point of c. With an attached y-map, alpha(P) = (r(x),
/// y s(x)) must lie on c and alpha(P + Q) = alpha(P) + alpha(Q) on sampled
/// pairs. The degree check asks for deg a = l an odd prime and deg b = l - 1.
EndomorphismReport verify_endomorphism(const Curve& c, const RationalMap& m, u64 samples, u64 seed,
                                       u64 cap = enumeration_cap());

/// alpha(P) for a map with an attached y-map. Throws InvalidArgument without one.
CurvePoint apply_endomorphism(const Curve& c, const RationalMap& m, const CurvePoint& P);

}  // namespace ecirr

#endif  // ECIRR_CURVE_HPP
