"""Rho invariants of 3-dimensional lens spaces, by three independent routes.

L(p, q) is the union of two solid tori glued so that the second meridian
maps to -q*mu + p*lambda; L(0, 1) is S^2 x S^1 and has vanishing rho.  A
character is a rational angle whose circle point has order dividing |p|.
The three evaluators (sawtooth sum, floor/area closed form, weighted
lattice count in a right triangle) must agree exactly, and the package's
check suite sweeps that agreement.

Sign conventions: rho is odd under reversing the orientation of either
parameter, so negative p or q reduce to the positive case with a sign.
The trivial character gives 0 in every evaluator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .rationals import RationalAngle, is_order_dividing, sawtooth, sign


def _validate(p: int, q: int, chi: RationalAngle) -> None:
    if gcd(p, q) != 1:
        raise ValueError(f"p and q must be coprime, got ({p}, {q})")
    if p != 0 and not is_order_dividing(chi, p):
        raise ValueError(
            f"character {chi} is not a root of unity of order dividing {abs(p)}"
        )


def _character_index(p: int, q: int, chi: RationalAngle) -> int:
    """The k in {0..p-1} with zeta^(k*q) equal to the character's circle point.

    Here p, q > 0, zeta = exp(2*pi*i/p), and chi = m/p: k = m * q^(-1) mod p.
    """
    m = int(chi.theta * p)
    return (m * pow(q % p, -1, p)) % p if p > 1 else 0


@dataclass(frozen=True, slots=True)
class LensSpace:
    """The pair (p, q); construction checks coprimality."""

    p: int
    q: int

    def __post_init__(self):
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"p and q must be coprime, got ({self.p}, {self.q})")

    def rho(self, chi: RationalAngle) -> Fraction:
        return rho_lens(self.p, self.q, chi)


def rho_lens(p: int, q: int, chi: RationalAngle) -> Fraction:
    """Rho invariant of L(p, q) at the character chi, as a sawtooth sum.

    With zeta = exp(2*pi*i/p) and the character written as zeta^(k*q), the
    value is -4 * sum_{j=1}^{k-1} saw(q*j/p) - 2 * saw(q*k/p).
    """
    _validate(p, q, chi)
    if p == 0:
        return Fraction(0)
    if p < 0:
        return -rho_lens(-p, q, chi)
    if q < 0:
        return -rho_lens(p, -q, chi)
    k = _character_index(p, q, chi)
    if k == 0:
        return Fraction(0)
    # accumulate numerators of saw(q*j/p) = (q*j mod p)/p - 1/2 over one pass;
    # exact because every term has denominator dividing 2p
    twice_sum = 0  # 2p * sum of saw(q*j/p), j = 1..k-1
    for j in range(1, k):
        r = (q * j) % p
        if r:
            twice_sum += 2 * r - p
    rk = (q * k) % p
    last = 2 * rk - p if rk else 0
    return Fraction(-2 * twice_sum - last, p)


def rho_lens_floor(p: int, q: int, chi: RationalAngle) -> Fraction:
    """Same value by the closed floor/area form.

    For positive parameters and k >= 1:
    -(2q/p)k^2 + 2k - 1 + 4*sum_{j=1}^{k-1} floor(j*q/p) + 2*floor(k*q/p).
    """
    _validate(p, q, chi)
    if p == 0:
        return Fraction(0)
    if p < 0:
        return -rho_lens_floor(-p, q, chi)
    if q < 0:
        return -rho_lens_floor(p, -q, chi)
    k = _character_index(p, q, chi)
    if k == 0:
        return Fraction(0)
    floors = 0
    for j in range(1, k):
        floors += (q * j) // p
    return (
        Fraction(-2 * q * k * k, p)
        + 2 * k
        - 1
        + 4 * floors
        + 2 * ((q * k) // p)
    )


def rho_lens_lattice(p: int, q: int, chi: RationalAngle) -> Fraction:
    """Same value as 4 * (weighted lattice count - area) of a right triangle.

    The triangle has vertices (0,0), (k,0), (k, kq/p); a lattice point
    counts 1 in the interior, 1/2 in the relative interior of an edge, and
    1/4 at a vertex other than the origin.  Points are taken column by
    column, x = 0..k.
    """
    _validate(p, q, chi)
    if p == 0:
        return Fraction(0)
    if p < 0:
        return -rho_lens_lattice(-p, q, chi)
    if q < 0:
        return -rho_lens_lattice(p, -q, chi)
    k = _character_index(p, q, chi)
    if k == 0:
        return Fraction(0)  # degenerate triangle
    # weighted count scaled by 4 to stay in integers
    count4 = 0
    for x in range(1, k + 1):
        top = q * x  # hypotenuse height at this column is top/p
        strictly_below = (top - 1) // p if top % p else top // p - 1
        on_hypotenuse = top % p == 0
        if x < k:
            count4 += 2  # (x, 0) interior of the bottom edge
            count4 += 4 * strictly_below  # interior points of the triangle
            if on_hypotenuse:
                count4 += 2  # interior of the hypotenuse
        else:
            count4 += 1  # vertex (k, 0)
            count4 += 2 * strictly_below  # interior of the vertical edge
            if on_hypotenuse:
                count4 += 1  # vertex (k, kq/p) is a lattice point
    area4 = Fraction(2 * q * k * k, p)
    return count4 - area4


def rho_lens_integer_framing(n: int, theta: RationalAngle) -> Fraction:
    """Rho of L(n, 1) at an |n|-th root of unity: 2n*theta*(1-theta) - sgn(n).

    n = 0 and the trivial character both give 0 (the trivial character
    gives 0 in every evaluator of this module, and rho of the trivial
    representation vanishes).
    """
    if n == 0:
        return Fraction(0)
    if not is_order_dividing(theta, n):
        raise ValueError(f"angle {theta} is not an |{n}|-th root of unity")
    t = theta.theta
    if t == 0:
        return Fraction(0)
    return 2 * n * t * (1 - t) - sign(n)


def normalize_lens(p: int, q: int) -> tuple[int, int, int]:
    """Canonical (p', q', eps) with p' > 0 (or (0,1)), 0 <= q' < p'.

    eps is the orientation sign: rho(L(p,q), chi) = eps * rho(L(p',q'), chi)
    for every character.  Changing the sign of p reverses orientation, and
    q only matters modulo p.
    """
    if gcd(p, q) != 1:
        raise ValueError(f"p and q must be coprime, got ({p}, {q})")
    if p == 0:
        return (0, 1, 1 if q > 0 else -1)
    eps = 1
    if p < 0:
        p, eps = -p, -eps
    return (p, q % p, eps)
