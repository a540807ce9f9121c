"""Exact rational scalars, rational points on the unit circle, and the sawtooth map.

Everything downstream (lens space computations, linking matrices, surgery
formulas) is built on arbitrary-precision rationals, so overflow cannot
occur and equality tests are exact.  Angles live in [0, 1) and stand for
the point exp(2*pi*i*theta) of U(1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Union

RationalLike = Union[int, Fraction, str]


def as_rational(x: RationalLike) -> Fraction:
    """Coerce ints, Fractions, and 'a/b' strings to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse 'a/b' or 'a' (exact, no floats accepted)."""
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"refusing inexact rational literal {text!r}; use a/b form")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid rational literal {text!r}") from exc


def format_rational(x: Fraction) -> str:
    """Serialize a rational as 'num/den', or plain 'n' for integers."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def sign(x: Fraction | int) -> int:
    """Sign in {-1, 0, 1}."""
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def sawtooth(x: RationalLike) -> Fraction:
    """Periodic sawtooth: x - floor(x) - 1/2 off the integers, 0 on them.

    Odd and 1-periodic; the value always lies in (-1/2, 1/2).
    """
    x = as_rational(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - floor(x) - Fraction(1, 2)


@dataclass(frozen=True, slots=True)
class RationalAngle:
    """A point exp(2*pi*i*theta) of U(1) with exact rational theta in [0, 1).

    Construction reduces theta mod 1, so the full angle 1 is stored as 0
    and two angles are equal iff they name the same circle point.
    """

    theta: Fraction

    def __init__(self, theta: RationalLike):
        t = as_rational(theta)
        object.__setattr__(self, "theta", t - floor(t))

    def nontrivial(self) -> bool:
        """True iff the circle point differs from 1."""
        return self.theta != 0

    def power(self, m: int) -> "RationalAngle":
        """The angle of omega**m, i.e. m*theta reduced mod 1."""
        return RationalAngle(m * self.theta)

    def conjugate(self) -> "RationalAngle":
        """The angle of the complex conjugate circle point."""
        return RationalAngle(-self.theta)

    def __str__(self) -> str:
        return format_rational(self.theta)


def angle(theta: RationalLike) -> RationalAngle:
    """Shorthand constructor for RationalAngle."""
    return RationalAngle(theta)


def is_order_dividing(a: RationalAngle, p: int) -> bool:
    """True iff omega**p = 1 for the circle point omega of angle ``a``.

    Rejects p = 0: every angle would qualify vacuously and callers that
    pass p = 0 are invariably confusing a lens parameter with an order.
    """
    if p == 0:
        raise ValueError("order test needs p != 0")
    return (p * a.theta).denominator == 1
