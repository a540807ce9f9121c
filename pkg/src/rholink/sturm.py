"""Independent eigenvalue-sign counter for exact Hermitian matrices.

This is the cross-check for the congruence-diagonalization signature: a
Hermitian matrix over the Gaussian rationals is realified to a symmetric
rational matrix (each eigenvalue doubled), scaled to integers, and the
signs of the characteristic polynomial's roots are counted exactly with
Sturm chains.  Multiple roots are handled by Yun's squarefree
decomposition, so the count is with multiplicity.  Nothing here shares
code with the congruence path.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .gaussian import GaussianRational

Poly = list[Fraction]  # coefficients, low degree first


# -- polynomial helpers (exact, over Q) ---------------------------------------


def _trim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return p


def _derivative(p: Poly) -> Poly:
    return [i * c for i, c in enumerate(p)][1:]


def _divmod_poly(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    a = a[:]
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    while len(a) >= len(b) and _trim(a):
        if len(a) < len(b):
            break
        f = a[-1] * inv
        shift = len(a) - len(b)
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        _trim(a)
    return _trim(q), a


def _monic(p: Poly) -> Poly:
    if not p:
        return p
    inv = 1 / p[-1]
    return [c * inv for c in p]


def _gcd_poly(a: Poly, b: Poly) -> Poly:
    a, b = a[:], b[:]
    while b:
        a, b = b, _divmod_poly(a, b)[1]
    return _monic(a)


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: p = prod g_i^i with the g_i squarefree and coprime."""
    p = _monic(_trim(p[:]))
    if len(p) <= 1:
        return []
    dp = _derivative(p)
    g = _gcd_poly(p, dp)
    w = _divmod_poly(p, g)[0]
    y = _divmod_poly(dp, g)[0]
    out: list[tuple[Poly, int]] = []
    i = 1
    while len(w) > 1:
        z = [a - b for a, b in zip_pad(y, _derivative(w))]
        _trim(z)
        gi = _gcd_poly(w, z)
        if len(gi) > 1:
            out.append((gi, i))
        w = _divmod_poly(w, gi)[0]
        y = _divmod_poly(z, gi)[0]
        i += 1
    return out


def zip_pad(a: Poly, b: Poly) -> list[tuple[Fraction, Fraction]]:
    n = max(len(a), len(b))
    zero = Fraction(0)
    return [
        (a[i] if i < len(a) else zero, b[i] if i < len(b) else zero) for i in range(n)
    ]


def _sturm_chain(p: Poly) -> list[Poly]:
    chain = [p[:], _derivative(p)]
    while len(chain[-1]) > 0:
        rem = _divmod_poly(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append([-c for c in rem])
    return chain


def _variations(values: list[Fraction | int]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def _count_roots_sturm(p: Poly) -> tuple[int, int]:
    """(positive, negative) distinct real roots of squarefree p with p(0) != 0."""
    chain = _sturm_chain(p)
    at_zero = [q[0] for q in chain]
    at_plus = [q[-1] for q in chain]
    at_minus = [q[-1] if (len(q) - 1) % 2 == 0 else -q[-1] for q in chain]
    pos = _variations(at_zero) - _variations(at_plus)
    neg = _variations(at_minus) - _variations(at_zero)
    return pos, neg


# -- characteristic polynomial -------------------------------------------------


def charpoly_int(m: Sequence[Sequence[int]]) -> list[int]:
    """Characteristic polynomial of an integer matrix (Faddeev-LeVerrier).

    Returned low-degree-first with leading coefficient 1.
    """
    n = len(m)
    coeffs = [0] * n + [1]  # fill c[n-k] as we go
    aux = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        prod = [
            [sum(m[i][t] * aux[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        tr = sum(prod[i][i] for i in range(n))
        assert tr % k == 0
        ck = -(tr // k)
        coeffs[n - k] = ck
        for i in range(n):
            prod[i][i] += ck
        aux = prod
    return coeffs


def realify(h: Sequence[Sequence[GaussianRational]]) -> list[list[Fraction]]:
    """2n x 2n real symmetric model [[Re, -Im], [Im, Re]] of a Hermitian matrix.

    Each eigenvalue of the input appears twice in the output.
    """
    n = len(h)
    out = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            out[i][j] = h[i][j].re
            out[n + i][n + j] = h[i][j].re
            out[i][n + j] = -h[i][j].im
            out[n + i][j] = h[i][j].im
    return out


def eigen_sign_count(rows: Sequence[Sequence[Fraction]]) -> tuple[int, int, int]:
    """(positive, negative, zero) eigenvalue counts of a symmetric rational matrix."""
    n = len(rows)
    if n == 0:
        return 0, 0, 0
    scale = lcm(*(x.denominator for row in rows for x in row)) if n else 1
    m = [[int(x * scale) for x in row] for row in rows]
    p = [Fraction(c) for c in charpoly_int(m)]
    zero = 0
    while p and p[0] == 0:
        p.pop(0)
        zero += 1
    pos = neg = 0
    for factor, mult in squarefree_decomposition(p):
        fp, fn = _count_roots_sturm(factor)
        pos += mult * fp
        neg += mult * fn
    return pos, neg, zero


def signature_sturm(h: Sequence[Sequence[GaussianRational]]) -> int:
    """Signature of a Hermitian Gaussian-rational matrix via the real model."""
    pos, neg, _zero = eigen_sign_count(realify(h))
    assert (pos - neg) % 2 == 0
    return (pos - neg) // 2
