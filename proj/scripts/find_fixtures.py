#!/usr/bin/env python3
# Copyright 2026 The ecirr Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Search small prime fields for CM curves carrying an endomorphism of degree 3 or 5.

The endomorphism is built with Velu's formulas from a rational kernel of order l
and composed with the isomorphism back onto the starting curve. The script also
identifies which element of the maximal order of Q(sqrt(D)) the map realises by
comparing its action on a rational point against the Frobenius relation.

Writes fixture directories (curve.json, map.json, cm.json) under data/fixtures/.
Pure Python; no third-party dependencies.
"""

import argparse
import json
import os
import sys

# j-invariants of CM curves over Q with class number one.
J_INVARIANT = {-2: 8000, -11: -32768, -19: -884736}


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class Order:
    """Maximal order of Q(sqrt(D)) in the basis (1, w)."""

    def __init__(self, D):
        self.D = D
        if D % 4 == 1:
            self.trace_w, self.norm_w, self.disc = 1, (1 - D) // 4, D
        else:
            self.trace_w, self.norm_w, self.disc = 0, -D, 4 * D

    def mul(self, x, y):
        a, b = x
        c, d = y
        return (a * c - b * d * self.norm_w, a * d + b * c + b * d * self.trace_w)

    def conj(self, x):
        return (x[0] + x[1] * self.trace_w, -x[1])

    def norm(self, x):
        a, b = x
        return a * a + a * b * self.trace_w + b * b * self.norm_w

    def elements_of_norm(self, n):
        out = []
        for b in range(-n - 1, n + 2):
            for a in range(-3 * n - 3, 3 * n + 4):
                if self.norm((a, b)) == n:
                    out.append((a, b))
        return out

    def frobenius(self, t, q):
        """Element of trace t and norm q (one of the two conjugates)."""
        for b in range(-4 * q, 4 * q + 1):
            # trace = 2a + b*trace_w
            num = t - b * self.trace_w
            if num % 2:
                continue
            a = num // 2
            if self.norm((a, b)) == q:
                return (a, b)
        return None


def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def curve_points(A, B, p):
    pts = []
    for x in range(p):
        rhs = (x * x * x + A * x + B) % p
        for y in range(p):
            if (y * y - rhs) % p == 0:
                pts.append((x, y))
    return pts


def ec_add(P, Q, A, p):
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2 and (y1 + y2) % p == 0:
        return None
    if P == Q:
        lam = (3 * x1 * x1 + A) * pow(2 * y1, -1, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
    x3 = (lam * lam - x1 - x2) % p
    return (x3, (lam * (x1 - x3) - y1) % p)


def ec_mul(k, P, A, p):
    R = None
    if k < 0:
        k = -k
        P = None if P is None else (P[0], (-P[1]) % p)
    while k:
        if k & 1:
            R = ec_add(R, P, A, p)
        P = ec_add(P, P, A, p)
        k >>= 1
    return R


# Dense polynomials over F_p, little-endian coefficient lists.
def pnorm(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def padd(f, g, p):
    n = max(len(f), len(g))
    return pnorm([((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p for i in range(n)])


def pmul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return pnorm(out)


def pscale(f, c, p):
    return pnorm([(a * c) % p for a in f])


def pderiv(f, p):
    return pnorm([(i * f[i]) % p for i in range(1, len(f))])


def peval(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def velu(A, B, p, kernel_half):
    """Return (A', B', num, den) with X(x) = num/den for a kernel given by half its x-coordinates."""
    v = w = 0
    den = [1]
    terms = []
    for (xq, yq) in kernel_half:
        gx = (3 * xq * xq + A) % p
        vq = 2 * gx % p
        uq = 4 * yq * yq % p
        v += vq
        w += uq + xq * vq
        terms.append((xq, vq, uq))
        lin = [(-xq) % p, 1]
        den = pmul(den, pmul(lin, lin, p), p)
    num = pmul([0, 1], den, p)
    for (xq, vq, uq) in terms:
        lin = [(-xq) % p, 1]
        other = [1]
        for (xr, _, _) in terms:
            if xr != xq:
                lr = [(-xr) % p, 1]
                other = pmul(other, pmul(lr, lr, p), p)
        part = padd(pscale(lin, vq, p), [uq], p)
        num = padd(num, pmul(part, other, p), p)
    return (A - 5 * v) % p, (B - 7 * w) % p, num, den


def signed(c, p):
    return c


def build_fixture(D, l, p, d, want_min_k0=1):
    order = Order(D)
    if p in (2, 3) or order.disc % p == 0 or p == l:
        return None
    j = J_INVARIANT[D] % p
    if j in (0, 1728 % p):
        return None
    c = (1728 - j) % p
    A0 = 3 * j * c % p
    B0 = 2 * j * c * c % p
    if (4 * A0 ** 3 + 27 * B0 ** 2) % p == 0:
        return None
    nonres = next(z for z in range(2, p) if legendre(z, p) == -1)
    for twist in (1, nonres):
        A = A0 * twist * twist % p
        B = B0 * twist ** 3 % p
        pts = curve_points(A, B, p)
        N = len(pts) + 1
        t = p + 1 - N
        if t % p == 0:
            continue
        if (t * t - 4 * p) % order.disc != 0:
            continue
        csq = (t * t - 4 * p) // order.disc
        if int(round(csq ** 0.5)) ** 2 != csq:
            continue
        if N % l:
            continue
        # rational points of order l
        kernels = []
        seen = set()
        for P in pts:
            if ec_mul(l, P, A, p) is None:
                half = [ec_mul(k, P, A, p) for k in range(1, (l - 1) // 2 + 1)]
                key = tuple(sorted(h[0] for h in half))
                if key in seen:
                    continue
                seen.add(key)
                kernels.append(half)
        for half in kernels:
            A1, B1, num, den = velu(A, B, p, half)
            us = [u for u in range(1, p) if pow(u, 4, p) * A % p == A1 and pow(u, 6, p) * B % p == B1]
            if not us:
                continue
            u = us[0]
            u2inv = pow(u * u, -1, p)
            u3inv = pow(u, -3, p)
            # r(x) = num / (u^2 den); a = num monic already
            a = num[:]
            b = pscale(den, u * u % p, p)
            # s(x) = X'(x)/u^3 with X' = (num' den - num den')/den^2
            s_num = pscale(padd(pmul(pderiv(num, p), den, p), pscale(pmul(num, pderiv(den, p), p), p - 1, p), p), u3inv, p)
            s_den = pmul(den, den, p)
            fx = {x: peval(a, x, p) for x in range(p)}

            def alpha_map(P):
                x, y = P
                bx = peval(b, x, p)
                if bx == 0:
                    return None
                sd = peval(s_den, x, p)
                return (fx[x] * pow(bx, -1, p) % p, y * peval(s_num, x, p) * pow(sd, -1, p) % p)

            ok = True
            for P in pts:
                Q = alpha_map(P)
                if Q is not None and (Q[1] * Q[1] - (Q[0] ** 3 + A * Q[0] + B)) % p:
                    ok = False
                    break
            if not ok:
                continue
            for P in pts[:40]:
                for Q in pts[:40]:
                    lhs = alpha_map(P) if True else None
                    S = ec_add(P, Q, A, p)
                    a_s = None if S is None else alpha_map(S)
                    rhs = ec_add(alpha_map(P), alpha_map(Q), A, p)
                    if a_s != rhs:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            # Identify alpha = c0 + c1 w from the action on rational points.
            pi = order.frobenius(t, p)
            u0, u1 = pi
            cands = order.elements_of_norm(l)
            match = None
            for cand in cands:
                good = True
                tested = 0
                for P in pts:
                    m = None
                    # order of P
                    R = P
                    for k in range(1, N + 1):
                        if R is None:
                            m = k
                            break
                        R = ec_add(R, P, A, p)
                    if m is None or m <= 2:
                        continue
                    from math import gcd
                    if gcd(u1, m) != 1:
                        continue
                    wv = (1 - u0) * pow(u1, -1, m) % m
                    k = (cand[0] + cand[1] * wv) % m
                    img = ec_mul(k, P, A, p)
                    act = alpha_map(P)
                    if (img is None) != (act is None) or (img is not None and img[0] != act[0]):
                        good = False
                        break
                    tested += 1
                if good and tested > 0:
                    match = cand
                    break
            if match is None:
                continue
            # valuation of pi^(2d)-1 at alpha
            def val(beta, alpha):
                k = 0
                nb = order.norm(alpha)
                while True:
                    x = order.mul(beta, order.conj(alpha))
                    if x[0] % nb or x[1] % nb:
                        return k
                    beta = (x[0] // nb, x[1] // nb)
                    k += 1

            rho = (1, 0)
            for _ in range(2 * d):
                rho = order.mul(rho, pi)
            k0 = val((rho[0] - 1, rho[1]), match)
            k0c = val((order.conj(rho)[0] - 1, order.conj(rho)[1]), match)
            if max(k0, k0c) < want_min_k0:
                continue
            return dict(D=D, l=l, p=p, d=d, A=A, B=B, N=N, t=t, a=a, b=b, s_num=s_num, s_den=s_den,
                        alpha=match, pi=pi, k0=k0, k0_conj=k0c)
    return None


def write_fixture(fx, root):
    name = "D%d_l%d_p%d_d%d" % (-fx["D"], fx["l"], fx["p"], fx["d"])
    path = os.path.join(root, name)
    os.makedirs(path, exist_ok=True)
    field = {"p": fx["p"], "n": 1, "modulus": [0, 1]}
    with open(os.path.join(path, "curve.json"), "w") as fh:
        json.dump({"A": fx["A"], "B": fx["B"], "field": field}, fh)
        fh.write("\n")
    with open(os.path.join(path, "map.json"), "w") as fh:
        json.dump({"a": fx["a"], "b": fx["b"], "s_num": fx["s_num"], "s_den": fx["s_den"],
                   "l": fx["l"], "field": field}, fh)
        fh.write("\n")
    with open(os.path.join(path, "cm.json"), "w") as fh:
        json.dump({"D": fx["D"], "l": fx["l"], "d": fx["d"],
                   "alpha": {"D": fx["D"], "c0": fx["alpha"][0], "c1": fx["alpha"][1]},
                   "pi": {"D": fx["D"], "c0": fx["pi"][0], "c1": fx["pi"][1]},
                   "trace": fx["t"], "points": fx["N"],
                   "k0": fx["k0"]}, fh, indent=1)
        fh.write("\n")
    return name


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data", "fixtures"))
    ap.add_argument("--dry-run", action="store_true")
    args = ap.parse_args()
    # (D, l, d, smallest p to try, largest p)
    wanted = [(-11, 3, 1, 40, 400), (-11, 5, 1, 40, 400), (-2, 3, 1, 40, 400),
              (-11, 3, 2, 11, 31), (-19, 5, 1, 40, 400)]
    for (D, l, d, lo, hi) in wanted:
        found = None
        for p in range(lo, hi + 1):
            if not is_prime(p):
                continue
            fx = build_fixture(D, l, p, d)
            if fx:
                found = fx
                break
        if not found:
            print("no fixture for D=%d l=%d d=%d" % (D, l, d), file=sys.stderr)
            continue
        print({k: found[k] for k in ("D", "l", "p", "d", "A", "B", "N", "t", "alpha", "pi", "k0", "k0_conj")})
        if not args.dry_run:
            write_fixture(found, args.out)


if __name__ == "__main__":
    main()
